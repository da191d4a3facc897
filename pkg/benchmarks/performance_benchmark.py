"""
Performance Benchmarking Suite
Times completion, structure analysis, closure covers and Smith forms
"""

import time
import numpy as np
import json
import sys
import os
from typing import Dict, List

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.algebra.abelian import smith_normal_form
from src.algebra.ideal_extension import classify
from src.cli.formats import parse_presentation, read_text
from src.closure.implications import Implication, ImplicationBase, closure_cover
from src.semigroup.cayley import from_presentation
from src.semigroup.structure import structure_report
from src.semigroup.zn import component_report, zn_semigroup
from src.words.rewriting import complete

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def _timed(fn, n_trials: int) -> Dict:
    times = []
    for _ in range(n_trials):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return {'avg_ms': np.mean(times) * 1000, 'std_ms': np.std(times) * 1000}


class PerformanceBenchmark:
    """Benchmark the main toolkit operations"""

    def __init__(self, seed: int = 2024):
        self.rng = np.random.default_rng(seed)
        self.results = {}

    def measure_completion_time(self, files: List[str] = None, n_trials: int = 20) -> Dict:
        """
        Measure completion plus table construction for presentation files

        Args:
            files: Presentation files under data/
            n_trials: Number of trials per file

        Returns:
            Dictionary with timing results
        """
        if files is None:
            files = ['rf1.pres', 'rf2.pres', 'rf3.pres', 'rf4.pres']

        print("\n📊 Benchmarking Completion...")
        print(f"{'File':<15} {'Complete':<20} {'Table':<20}")
        print("=" * 55)

        results = {}
        for name in files:
            path = os.path.join(DATA, name)
            rs = parse_presentation(read_text(path), path)
            completed = complete(rs)
            completion = _timed(lambda: complete(rs), n_trials)
            table = _timed(lambda: from_presentation(completed), n_trials)
            results[name] = {'complete': completion, 'table': table}
            print(f"{name:<15} {completion['avg_ms']:.2f}ms±{completion['std_ms']:.2f}"
                  f"{'':<4} {table['avg_ms']:.2f}ms±{table['std_ms']:.2f}")

        self.results['completion'] = results
        return results

    def measure_structure_time(self, moduli: List[int] = None, n_trials: int = 5) -> Dict:
        """Compare the full table report of Z_n with the CRT component report"""
        if moduli is None:
            moduli = [60, 120, 360, 504]

        print("\n🧩 Benchmarking Structure of Z_n...")
        print(f"{'n':<8} {'Table':<20} {'CRT':<20} {'Speedup':<10}")
        print("=" * 60)

        results = {}
        for n in moduli:
            S = zn_semigroup(n)
            table = _timed(lambda: structure_report(S), n_trials)
            crt = _timed(lambda: component_report(n, max_elements=0), n_trials)
            speedup = table['avg_ms'] / crt['avg_ms']
            results[str(n)] = {'table': table, 'crt': crt, 'speedup': speedup}
            print(f"{n:<8} {table['avg_ms']:.2f}ms{'':<12} {crt['avg_ms']:.3f}ms{'':<11} "
                  f"{speedup:.1f}x")

        self.results['structure'] = results
        return results

    def measure_closure_time(self, sizes: List[int] = None, n_trials: int = 5) -> Dict:
        """Measure closure covers of random implication bases"""
        if sizes is None:
            sizes = [8, 12, 16, 20]

        print("\n🔗 Benchmarking Closure Covers...")

        results = {}
        for k in sizes:
            ground = tuple(f"x{i}" for i in range(k))
            implications = []
            for _ in range(k):
                premise = map(str, self.rng.choice(ground, size=2, replace=False))
                conclusion = map(str, self.rng.choice(ground, size=1))
                implications.append(Implication(frozenset(premise), frozenset(conclusion)))
            base = ImplicationBase(ground, tuple(implications))
            cover = closure_cover(base)
            timing = _timed(lambda: closure_cover(base), n_trials)
            results[str(k)] = {**timing, 'rows': len(cover.rows), 'closed_sets': cover.count}
            print(f"k={k:<4} {timing['avg_ms']:.2f}ms  rows={len(cover.rows)}  "
                  f"closed sets={cover.count}")

        self.results['closure'] = results
        return results

    def measure_smith_form_time(self, dims: List[int] = None, n_trials: int = 20) -> Dict:
        """Measure Smith forms of random integer matrices"""
        if dims is None:
            dims = [3, 5, 8]

        print("\n🧮 Benchmarking Smith Normal Form...")

        results = {}
        for d in dims:
            A = self.rng.integers(-50, 51, size=(d, d)).tolist()
            timing = _timed(lambda: smith_normal_form(A), n_trials)
            results[str(d)] = timing
            print(f"{d}x{d}: {timing['avg_ms']:.2f}ms ± {timing['std_ms']:.2f}ms")

        self.results['smith_form'] = results
        return results

    def measure_classification_time(self, n_trials: int = 5) -> Dict:
        """Measure the k-classification of ideal extensions of C(13,18) by C(3,9)"""
        print("\n📐 Benchmarking Extension Classification...")
        timing = _timed(lambda: classify(3, 9, 13, 18), n_trials)
        print(f"classify(3,9,13,18): {timing['avg_ms']:.2f}ms ± {timing['std_ms']:.2f}ms")
        self.results['classification'] = timing
        return timing

    def run_all_benchmarks(self) -> Dict:
        """Run complete benchmark suite"""
        print("\n" + "="*70)
        print("🚀 Finite Commutative Semigroup Benchmark Suite")
        print("="*70)

        self.measure_completion_time()
        self.measure_structure_time()
        self.measure_closure_time()
        self.measure_smith_form_time()
        self.measure_classification_time()

        return self.results

    def save_results(self, filename: str = "results/benchmark_results.json"):
        """Save results to JSON file"""
        os.makedirs(os.path.dirname(filename) or ".", exist_ok=True)
        with open(filename, 'w') as f:
            json.dump(self.results, f, indent=2, default=float)
        print(f"\n✅ Results saved to {filename}")

    def generate_summary_report(self) -> str:
        """Generate markdown summary report"""
        report = "# Performance Benchmark Report\n\n"
        report += f"Generated: {time.strftime('%Y-%m-%d %H:%M:%S')}\n\n"

        report += "## Completion\n\n"
        if 'completion' in self.results:
            report += "| File | Complete | Table |\n"
            report += "|------|----------|-------|\n"
            for name, data in self.results['completion'].items():
                report += (f"| {name} | {data['complete']['avg_ms']:.2f}ms "
                           f"| {data['table']['avg_ms']:.2f}ms |\n")
            report += "\n"

        report += "## Structure of Z_n\n\n"
        if 'structure' in self.results:
            report += "| n | Table | CRT | Speedup |\n"
            report += "|---|-------|-----|---------|\n"
            for n, data in self.results['structure'].items():
                report += (f"| {n} | {data['table']['avg_ms']:.2f}ms | {data['crt']['avg_ms']:.3f}ms "
                           f"| {data['speedup']:.1f}x |\n")
            report += "\n"

        report += "## Closure Covers\n\n"
        if 'closure' in self.results:
            for k, data in self.results['closure'].items():
                report += (f"- **k = {k}:** {data['avg_ms']:.2f}ms, {data['rows']} rows, "
                           f"{data['closed_sets']} closed sets\n")
            report += "\n"

        return report


if __name__ == "__main__":
    benchmark = PerformanceBenchmark()
    results = benchmark.run_all_benchmarks()
    benchmark.save_results()

    report = benchmark.generate_summary_report()
    with open("results/benchmark_report.md", "w") as f:
        f.write(report)

    print("\n" + "="*70)
    print("✅ All benchmarks complete!")
    print("="*70)
