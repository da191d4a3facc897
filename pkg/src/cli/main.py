"""
Command-line frontend

    python -m src.cli.main complete data/rf2.pres
    python -m src.cli.main structure --zn 18 --format json
    python -m src.cli.main exq 2 10 13 6

Exit codes: 0 on success, 1 on a domain error, 2 on parse, I/O or usage errors.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..algebra.abelian import rfag_type, smith_normal_form, tmin_tmax, verify_smith_form
from ..algebra.cyclic_hom import build_strong_semilattice, count_strong_semilattices, exq
from ..algebra.ideal_extension import (Quintuple, classify, is_strongly_realizable, realize,
                                       verify_quintuple_laws)
from ..closure.implications import closure_cover, generating_name, rfsl_from_base
from ..config import Budgets, OUTPUT_FORMATS, RunConfig
from ..errors import InfiniteGroupError, NotRealizableError, ParseError, SemigroupToolkitError
from ..semigroup.cayley import (CayleySemigroup, from_presentation, hasse_covers, is_archimedean,
                                is_group, is_nil, is_semilattice, j_retract_search)
from ..semigroup.cyclic import CyclicType
from ..semigroup.structure import is_semilattice_of_groups, structure_report
from ..semigroup.zn import component_report, idempotents_zn, phi, unit_group_type, zn_semigroup
from ..words.free_words import format_word
from ..words.rewriting import (complete_with_report, enumerate_normal_forms, normal_form_count,
                               thue_oracle, reduce)
from .export import (Report, error_envelope, format_exponents, render, semilattice_dot,
                     structure_dot, structure_text, table_text)
from .formats import (format_table, parse_frame, parse_implications, parse_matrix,
                      parse_presentation, parse_table, read_text, write_table)

log = logging.getLogger(__name__)


def _budgets(args: argparse.Namespace) -> Budgets:
    return Budgets(max_rules=args.max_rules, max_elements=args.max_elements,
                   search_budget=args.budget)


def _emit(S: CayleySemigroup, config: RunConfig):
    if config.emit_table:
        write_table(S, config.emit_table)


def _is_presentation(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line:
            return line.lower().startswith('gens')
    return False


def _load_semigroup(path: str, budgets: Budgets) -> CayleySemigroup:
    """A presentation file is completed first; anything else is read as a Cayley table"""
    text = read_text(path)
    if _is_presentation(text):
        completed = complete_with_report(parse_presentation(text, path), budgets).system
        return from_presentation(completed, budgets)
    return parse_table(text, path)


# Subcommands

def cmd_complete(args: argparse.Namespace, config: RunConfig) -> Report:
    rs = parse_presentation(read_text(args.input), args.input)
    result = complete_with_report(rs, config.budgets)
    system = result.system
    gens = system.generators
    count = normal_form_count(system)
    forms: List[str] = []
    if count is not None:
        forms = [format_word(w, gens) for w in
                 enumerate_normal_forms(system, limit=config.budgets.max_elements)]
        if config.emit_table:
            _emit(from_presentation(system, config.budgets), config)

    text = [f"generators: {' '.join(gens)}", f"completed rules ({len(system.rules)}):"]
    text += [f"  {line}" for line in system.format_rules()]
    if result.added:
        text.append("added: " + ", ".join(rule.format(gens) for rule in result.added))
    if result.removed:
        text.append("removed: " + ", ".join(rule.format(gens) for rule in result.removed))
    text.append(f"count: {'infinite' if count is None else count}")
    if forms:
        text.append("normal forms: " + " ".join(forms))
    payload = {
        'generators': list(gens),
        'rules': system.format_rules(),
        'added': [rule.format(gens) for rule in result.added],
        'removed': [rule.format(gens) for rule in result.removed],
        'rounds': result.rounds,
        'count': 'infinite' if count is None else count,
        'normal_forms': forms,
    }
    return Report('complete', payload, text)


def cmd_structure(args: argparse.Namespace, config: RunConfig) -> Report:
    if args.zn is not None:
        S = zn_semigroup(args.zn, config.budgets.max_elements)
    elif args.input:
        S = _load_semigroup(args.input, config.budgets)
    else:
        raise ValueError("structure needs an input file or --zn N")
    report = structure_report(S)
    properties = {
        'nil': is_nil(S),
        'group': is_group(S),
        'semilattice': is_semilattice(S),
        'archimedean': is_archimedean(S),
        'semilattice_of_groups': is_semilattice_of_groups(S),
    }
    payload = report.as_dict(S)
    payload['properties'] = properties
    text = structure_text(S, report)
    text.append("properties: " + (", ".join(k for k, v in properties.items() if v) or "none"))
    if args.retract:
        found = j_retract_search(S, config.budgets.search_budget)
        reps = None if found.representatives is None else [
            S.name(x) for x in sorted(found.representatives)]
        payload['retract'] = {'status': found.status, 'representatives': reps,
                              'nodes': found.nodes}
        text.append(f"J-retract: {found.status}"
                    + ("" if reps is None else " " + S.format_set(found.representatives)))
    if args.show_table:
        text += table_text(S)
    _emit(S, config)
    return Report('structure', payload, text, dot=structure_dot(S, report))


def cmd_exq(args: argparse.Namespace, config: RunConfig) -> Report:
    result = exq(CyclicType(args.m, args.n), CyclicType(args.m_prime, args.n_prime))
    payload = {'source': str(result.source), 'target': str(result.target),
               'exponents': list(result.exponents)}
    text = [f"Exq({result.source}, {result.target}) = {format_exponents(result.exponents)}"]
    return Report('exq', payload, text)


def cmd_extend(args: argparse.Namespace, config: RunConfig) -> Report:
    m, n, mp, np_ = args.m, args.n, args.m_prime, args.n_prime
    if args.k is None:
        rows = classify(m, n, mp, np_)
        text = [f"ideal extensions of C({mp},{np_}) by C({m},{n})",
                "  k  realizable  strong  note"]
        for row in rows:
            note = "trivial" if row.trivial else (
                f"same as k={row.duplicate_of}" if row.duplicate_of is not None else "")
            text.append(f"{row.k:>3}  {'yes' if row.realizable else 'no':<10}  "
                        f"{'yes' if row.strong else 'no':<6}  {note}".rstrip())
        payload = {'quintuple': [m, n, mp, np_],
                   'rows': [{'k': r.k, 'realizable': r.realizable, 'strong': r.strong,
                             'trivial': r.trivial, 'duplicate_of': r.duplicate_of}
                            for r in rows]}
        return Report('extend', payload, text)

    try:
        q = Quintuple(m, n, mp, np_, args.k)
    except ValueError as exc:
        raise NotRealizableError(str(exc), witness=(m, n, mp, np_, args.k)) from None
    ext = realize(q)
    S = ext.semigroup
    strong = is_strongly_realizable(q)
    laws = verify_quintuple_laws(ext)
    _emit(S, config)
    if args.emit:
        return Report('extend', {'table': S.table.tolist(), 'names': list(S.names)},
                      format_table(S).rstrip("\n").splitlines())
    text = [f"{q}: realizable, {'strong' if strong else 'not strong'}",
            f"elements: {S.size}", f"laws verified: {laws}"] + table_text(S)
    payload = {'quintuple': [m, n, mp, np_, args.k], 'strong': strong, 'size': S.size,
               'laws_verified': laws, 'table': S.table.tolist(), 'names': list(S.names)}
    return Report('extend', payload, text)


def cmd_frame(args: argparse.Namespace, config: RunConfig) -> Report:
    frame = parse_frame(read_text(args.input), args.input)
    text = ["nodes: " + ", ".join(f"{v} {frame.types[v]}" for v in frame.nodes)]
    edges = []
    for edge in frame.edges:
        allowed = exq(frame.types[edge.upper], frame.types[edge.lower])
        edges.append({'upper': edge.upper, 'lower': edge.lower, 'k': edge.k,
                      'exq': list(allowed.exponents)})
        chosen = "" if edge.k is None else f"  k={edge.k}"
        text.append(f"  Exq({edge.upper}, {edge.lower}) = "
                    f"{format_exponents(allowed.exponents)}{chosen}")
    payload: Dict[str, object] = {'nodes': {v: str(frame.types[v]) for v in frame.nodes},
                                  'edges': edges}
    if frame.edges and all(edge.k is not None for edge in frame.edges):
        S = build_strong_semilattice(frame)
        payload['size'] = S.size
        text.append(f"strong semilattice: {S.size} elements")
        _emit(S, config)
    if args.count:
        counted = count_strong_semilattices(frame)
        payload['intersection'] = list(counted.intersection)
        payload['ss'] = counted.ss
        text.append(f"IS = {format_exponents(counted.intersection)}")
        text.append(f"ss = {counted.ss}")
    dot = semilattice_dot("frame", list(frame.nodes),
                          [(edge.lower, edge.upper) for edge in frame.edges])
    return Report('frame', payload, text, dot=dot)


def cmd_abelian(args: argparse.Namespace, config: RunConfig) -> Report:
    rows, cols = parse_matrix(read_text(args.input), args.input)
    form = smith_normal_form(rows, cols=cols)
    if not verify_smith_form(rows, form):
        log.warning("Smith form failed verification")
    text = ["D:"] + [f"  {list(r)}" for r in form.D]
    text += ["C:"] + [f"  {list(r)}" for r in form.C]
    text += ["B:"] + [f"  {list(r)}" for r in form.B]
    payload: Dict[str, object] = {'D': [list(r) for r in form.D], 'C': [list(r) for r in form.C],
                                  'B': [list(r) for r in form.B]}
    try:
        atype = rfag_type(rows, generators=cols)
    except InfiniteGroupError as exc:
        payload['free_rank'] = exc.free_rank
        text.append(f"infinite: free rank {exc.free_rank}")
        return Report('abelian', payload, text)
    payload['invariant_factors'] = list(atype.invariant_factors)
    payload['type'] = str(atype)
    text.append("invariant factors: " + " ".join(str(f) for f in atype.invariant_factors))
    text.append(f"type: {atype}")
    if atype.invariant_factors:
        table = tmin_tmax(atype)
        payload['t_min'], payload['t_max'] = table.t_min, table.t_max
        text.append(f"t_min = {table.t_min}, t_max = {table.t_max}")
    return Report('abelian', payload, text)


def cmd_rfsl(args: argparse.Namespace, config: RunConfig) -> Report:
    base = parse_implications(read_text(args.input), args.input)
    result = rfsl_from_base(base, config.budgets.max_ground_set)
    Y = result.semigroup
    order = Y.table == np.arange(Y.size)[None, :]      # x <= y iff x v y = y
    covers = [(Y.name(lo), Y.name(hi)) for lo, hi in hasse_covers(order)]
    text = [f"elements ({Y.size}): " + ", ".join(Y.names)]
    text += [f"  {x} -> {Y.name(g)}" for x, g in result.generators.items()]
    text += [f"  {lo} < {hi}" for lo, hi in covers]
    payload = {'size': Y.size, 'elements': list(Y.names),
               'generators': {x: Y.name(g) for x, g in result.generators.items()},
               'covers': [list(c) for c in covers]}
    _emit(Y, config)
    return Report('rfsl', payload, text, dot=semilattice_dot("rfsl", list(Y.names), covers))


def cmd_closure(args: argparse.Namespace, config: RunConfig) -> Report:
    base = parse_implications(read_text(args.input), args.input)
    cover = closure_cover(base, config.budgets.max_ground_set)
    text = ["ground: " + " ".join(base.ground), f"rows ({len(cover.rows)}):"]
    text += [f"  {row}" for row in cover.rows]
    text.append(f"closed sets: {cover.count}")
    payload = {'ground': list(base.ground), 'rows': list(cover.rows), 'count': cover.count}
    if args.list:
        named = [("{" + ",".join(x for x in base.ground if x in s) + "}",
                  generating_name(base, s) if s else "")
                 for s in cover.expand()]
        text += [f"  {members}  generated by {gen or '{}'}" for members, gen in named]
        payload['closed_sets'] = [members for members, _ in named]
    return Report('closure', payload, text)


def cmd_zn(args: argparse.Namespace, config: RunConfig) -> Report:
    n = args.n
    components = component_report(n, config.budgets.max_elements)
    units = unit_group_type(n)
    text = [f"n = {n}", f"phi(n) = {phi(n)}", f"units: {units}",
            "idempotents: {" + ", ".join(str(e) for e in sorted(idempotents_zn(n))) + "}",
            "  e  signature  size  kernel  type"]
    rows = []
    for c in components:
        text.append(f"{c.idempotent:>3}  {''.join(map(str, c.signature)):<9}  {c.size:>4}  "
                    f"{c.kernel_size:>6}  {c.kernel_type}")
        rows.append({'idempotent': c.idempotent, 'signature': list(c.signature), 'size': c.size,
                     'kernel_size': c.kernel_size,
                     'kernel_type': list(c.kernel_type.invariant_factors),
                     'nil_sizes': list(c.nil_sizes)})
    if config.emit_table:
        _emit(zn_semigroup(n, config.budgets.max_elements), config)
    payload = {'n': n, 'phi': phi(n), 'units': list(units.invariant_factors),
               'idempotents': sorted(idempotents_zn(n)), 'components': rows}
    return Report('zn', payload, text)


def cmd_thue(args: argparse.Namespace, config: RunConfig) -> Report:
    rs = parse_presentation(read_text(args.input), args.input)
    if args.complete:
        rs = complete_with_report(rs, config.budgets).system
    partition = thue_oracle(rs, args.length, args.max_words)
    gens = rs.generators
    classes = []
    text = [f"words of length <= {args.length}: {sum(len(c) for c in partition.classes)}",
            f"classes: {len(partition.classes)}",
            f"church-rosser: {'yes' if partition.is_church_rosser() else 'no'}"]
    for members in partition.classes:
        rep = format_word(reduce(members[0], rs), gens)
        names = [format_word(w, gens) for w in members]
        classes.append({'normal_form': rep, 'members': names})
        if args.show_classes:
            text.append(f"  {rep}: " + " ".join(names))
    payload = {'length': args.length, 'church_rosser': partition.is_church_rosser(),
               'classes': classes}
    return Report('thue', payload, text)


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Report]] = {
    'complete': cmd_complete,
    'structure': cmd_structure,
    'exq': cmd_exq,
    'extend': cmd_extend,
    'frame': cmd_frame,
    'abelian': cmd_abelian,
    'rfsl': cmd_rfsl,
    'closure': cmd_closure,
    'zn': cmd_zn,
    'thue': cmd_thue,
}


def build_parser() -> argparse.ArgumentParser:
    defaults = Budgets()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS,
                        default="text", help="Report format.")
    common.add_argument("--max-rules", type=int, default=defaults.max_rules,
                        help="Completion stops with an error beyond this many rules.")
    common.add_argument("--max-elements", type=int, default=defaults.max_elements,
                        help="Largest Cayley table built.")
    common.add_argument("--budget", type=int, default=defaults.search_budget,
                        help="Node budget of exhaustive searches.")
    common.add_argument("--emit-table", metavar="PATH", default=None,
                        help="Also write the Cayley table of the result to PATH.")
    common.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging threshold on stderr.")
    common.add_argument("-v", "--verbose", action="store_true", help="Shorthand for --log-level INFO.")

    parser = argparse.ArgumentParser(prog="fcs",
                                     description="Finite commutative semigroup toolkit")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("complete", parents=[common],
                              help="Complete a presentation and list its normal forms.")
    p.add_argument("input", help="Presentation file.")

    p = subparsers.add_parser("structure", parents=[common],
                              help="Components, semilattice, kernels and nil posets.")
    p.add_argument("input", nargs="?", help="Presentation or Cayley-table file.")
    p.add_argument("--zn", type=int, default=None, metavar="N", help="Analyze (Z_N, *) instead.")
    p.add_argument("--retract", action="store_true",
                   help="Search for a subsemigroup meeting every J-class once.")
    p.add_argument("--show-table", action="store_true", help="Print the Cayley table too.")

    for name, help_text in (("exq", "Exponents k with a -> b^k a morphism C(m,n) -> C(m',n')."),
                            ("extend", "Ideal extensions of C(m',n') by C(m,n).")):
        p = subparsers.add_parser(name, parents=[common], help=help_text)
        for arg in ("m", "n", "m_prime", "n_prime"):
            p.add_argument(arg, type=int)
    p.add_argument("--k", type=int, default=None, help="Realize this quintuple.")
    p.add_argument("--emit", action="store_true", help="Print the realized table file.")

    p = subparsers.add_parser("frame", parents=[common],
                              help="Exq sets along a frame of cyclic semigroups.")
    p.add_argument("input", help="Frame file.")
    p.add_argument("--count", action="store_true",
                   help="Count strong semilattices over a diamond frame.")

    p = subparsers.add_parser("abelian", parents=[common],
                              help="Smith normal form and type of a finitely presented Abelian group.")
    p.add_argument("input", help="Matrix file.")

    p = subparsers.add_parser("rfsl", parents=[common],
                              help="Relatively free semilattice of an implication file.")
    p.add_argument("input", help="Implication file.")

    p = subparsers.add_parser("closure", parents=[common], help="012-rows of the closed sets.")
    p.add_argument("input", help="Implication file.")
    p.add_argument("--list", action="store_true", help="List every closed set.")

    p = subparsers.add_parser("zn", parents=[common], help="Structure of (Z_n, *).")
    p.add_argument("n", type=int)

    p = subparsers.add_parser("thue", parents=[common],
                              help="Thue classes of short words by brute force.")
    p.add_argument("input", help="Presentation file.")
    p.add_argument("--length", type=int, default=4, help="Maximal word length.")
    p.add_argument("--max-words", type=int, default=Budgets().max_oracle_words)
    p.add_argument("--complete", action="store_true", help="Complete the presentation first.")
    p.add_argument("--show-classes", action="store_true", help="List every class.")
    return parser


def _configure_logging(args: argparse.Namespace):
    level = "INFO" if args.verbose and args.log_level == "WARNING" else args.log_level
    logging.basicConfig(level=getattr(logging, level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        config = RunConfig(subcommand=args.command,
                           inputs=tuple(x for x in [getattr(args, 'input', None)] if x),
                           output_format=args.output_format, budgets=_budgets(args),
                           emit_table=args.emit_table)
        report = COMMANDS[args.command](args, config)
        sys.stdout.write(render(report, config.output_format))
    except (ParseError, OSError, ValueError) as exc:
        print(error_envelope(exc), file=sys.stderr)
        return 2
    except SemigroupToolkitError as exc:
        print(error_envelope(exc), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
