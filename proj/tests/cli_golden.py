#!/usr/bin/env python3
"""Compares CLI output against files in tests/golden.

usage: cli_golden.py CLI (--check | --update)
"""
import argparse
import pathlib
import subprocess
import sys

GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"

CASES = {
    "basis_2_2": ["basis", "2", "2"],
    "basis_1_3": ["basis", "1", "3"],
    "basis_odd": ["basis", "2", "1"],
    "bracket_one_crossing": ["bracket", "fixtures/one_crossing.tng"],
    "bracket_sigma3": ["bracket", "fixtures/sigma3.tng"],
    "bracket_sigma_minus3": ["bracket", "fixtures/sigma_minus3.tng"],
    "bracket_kink_positive": ["bracket", "fixtures/kink_positive.tng"],
    "pairing_2_2": ["pairing", "2", "2"],
    "pairing_1_3": ["pairing", "1", "3"],
    "p_one_crossing": ["p", "fixtures/one_crossing.tng"],
    "p_identity11_k1": ["p", "fixtures/identity11.tng", "--k", "1"],
    "p_bad_root": ["p", "fixtures/identity11.tng", "--k", "3"],
    "rho_theta": ["rho", "fixtures/theta.tng"],
    "rho_handcuff": ["rho", "fixtures/handcuff.tng"],
    "states_theta": ["states", "fixtures/theta.tng", "--rho", "0"],
    "states_theta_thick2": ["states", "fixtures/theta_thick2.tng"],
    "invariant_circle": ["invariant", "fixtures/circle.tng", "--k", "1"],
    "invariant_theta_all": ["invariant", "fixtures/theta.tng", "--all-k"],
    "invariant_handcuff_rho": ["invariant", "fixtures/handcuff.tng", "--rho", "0", "--k", "1"],
    "invariant_no_root": ["invariant", "fixtures/theta.tng"],
    "verify_k1": ["verify", "fixtures/pairs/manifest.txt", "--k", "1"],
    "validate_sigma3": ["validate", "fixtures/sigma3.tng"],
    "validate_missing": ["validate", "fixtures/absent.tng"],
    "json_basis": ["--json", "basis", "2", "2"],
    "json_rho": ["--json", "rho", "fixtures/theta.tng"],
}


def render(cli, args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    return f"$ tangleinv {' '.join(args)}\n[exit {proc.returncode}]\n{proc.stdout}"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("cli")
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("--check", action="store_true")
    mode.add_argument("--update", action="store_true")
    opts = parser.parse_args()

    failures = []
    for name, args in CASES.items():
        path = GOLDEN / f"{name}.txt"
        got = render(opts.cli, args)
        if opts.update:
            GOLDEN.mkdir(exist_ok=True)
            path.write_text(got)
            continue
        if not path.exists():
            failures.append(f"{name}: no golden file")
        elif path.read_text() != got:
            failures.append(f"{name}: output differs\n--- expected\n{path.read_text()}--- got\n{got}")
    for f in failures:
        print(f"FAIL {f}")
    if opts.check:
        print(f"{len(CASES) - len(failures)}/{len(CASES)} golden cases match")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
