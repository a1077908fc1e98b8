"""Run the CLI for every line of commands.txt and compare with the stored output.

    python3 check_goldens.py --cli build/rlag            # check all
    python3 check_goldens.py --cli build/rlag --only X   # check one file
    python3 check_goldens.py --cli build/rlag --regen    # rewrite the files
"""
import argparse
import difflib
import pathlib
import shlex
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent


def load():
    for line in (HERE / "commands.txt").read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            name, rest = line.split(None, 1)
            yield name, shlex.split(rest)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--only")
    ap.add_argument("--regen", action="store_true")
    ap.add_argument("--list", action="store_true")
    opts = ap.parse_args()

    failed = 0
    for name, args in load():
        if opts.list:
            print(name)
            continue
        if opts.only and name != opts.only:
            continue
        out = subprocess.run([opts.cli, *args], capture_output=True, text=True, check=True).stdout
        path = HERE / name
        if opts.regen:
            path.write_text(out)
            continue
        want = path.read_text()
        if out != want:
            failed += 1
            sys.stdout.writelines(difflib.unified_diff(want.splitlines(True), out.splitlines(True), name, "actual"))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
