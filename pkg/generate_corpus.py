#!/usr/bin/env python3

"""
Generate random requirement corpora for throughput experiments.

Each corpus is a ``.req`` file of random pattern requirements over a pool of
boolean signals and numerical variables. With ``--check`` every generated
file is also run through the consistency check and the verdict, state count
and time are printed.

Data Layout:
- <output_dir>/corpus_<count>_<index>.req
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np
from tqdm import tqdm

from reqlint.analyses import check_consistency
from reqlint.engine.checker import DEFAULT_MAX_STATES, DEFAULT_TIMEOUT
from reqlint.psp import parse_requirements
from reqlint.utils.generators import generate_corpus


def write_corpora(output_dir: str, counts, n_variables: int, numeric_fraction: float,
                  repeats: int, seed: int) -> list:
    """
    Write ``repeats`` random corpora for every requirement count

    Args:
        output_dir: Directory for the generated files
        counts: Requirement counts, one group of files per count
        n_variables: Distinct signals per corpus
        numeric_fraction: Share of signals used as numerical variables
        repeats: Files per count
        seed: Seed of the numpy random generator

    Returns:
        list: Paths of the written files
    """
    rng = np.random.default_rng(seed)
    output = Path(output_dir)
    output.mkdir(parents=True, exist_ok=True)

    paths = []
    jobs = [(count, index) for count in counts for index in range(repeats)]
    for count, index in tqdm(jobs, desc="Generating", unit="file"):
        path = output / f"corpus_{count}_{index}.req"
        path.write_text(generate_corpus(rng, count, n_variables, numeric_fraction), encoding="utf-8")
        paths.append(path)
    return paths


def check_corpora(paths, max_states: int, timeout: float):
    """Run the consistency check on each file and print one line per file"""
    print(f"{'file':<32} {'verdict':<14} {'states':>9} {'seconds':>9}")
    for path in tqdm(paths, desc="Checking", unit="file"):
        requirements = parse_requirements(path.read_text(encoding="utf-8"))
        started = time.monotonic()
        result = check_consistency(requirements, max_states=max_states, timeout=timeout)
        elapsed = time.monotonic() - started
        states = result.stats.states if result.stats else 0
        tqdm.write(f"{path.name:<32} {result.verdict.value:<14} {states:>9} {elapsed:>9.2f}")


def main():
    parser = argparse.ArgumentParser(
        description="Generate random requirement corpora",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # 100 requirements over 30 signals
  python generate_corpus.py --output_dir corpus/random --counts 100

  # Growing sizes, three files each, checked right away
  python generate_corpus.py --output_dir corpus/random \\
    --counts 10 20 50 100 --repeats 3 --check --timeout 30
        """
    )

    # Corpus shape
    parser.add_argument("--output_dir", required=True,
                        help="Directory for the generated .req files")
    parser.add_argument("--counts", type=int, nargs="+", default=[100],
                        help="Requirement counts to generate (default: 100)")
    parser.add_argument("--variables", type=int, default=30,
                        help="Distinct signals per corpus (default: 30)")
    parser.add_argument("--numeric_fraction", type=float, default=0.2,
                        help="Share of signals compared against constants (default: 0.2)")
    parser.add_argument("--repeats", type=int, default=1,
                        help="Files per requirement count (default: 1)")
    parser.add_argument("--seed", type=int, default=0,
                        help="Random seed (default: 0)")

    # Optional check
    parser.add_argument("--check", action="store_true",
                        help="Run the consistency check on every generated file")
    parser.add_argument("--max_states", type=int, default=DEFAULT_MAX_STATES,
                        help="Tableau state cap per check (default: 1000000)")
    parser.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT,
                        help="Time cap per check in seconds (default: 60)")

    args = parser.parse_args()

    if args.variables < 1 or not 0.0 <= args.numeric_fraction <= 1.0:
        print("Error: need at least one signal and a numeric fraction in [0, 1]")
        sys.exit(1)

    paths = write_corpora(args.output_dir, args.counts, args.variables, args.numeric_fraction,
                          args.repeats, args.seed)
    print(f"Wrote {len(paths)} corpora to {args.output_dir}")

    if args.check:
        check_corpora(paths, args.max_states, args.timeout)


if __name__ == "__main__":
    main()
