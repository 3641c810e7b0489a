"""Write the built-in example algebras as JSON files usable with ``braidprob eval/check --algebra``."""

import sys
from pathlib import Path

from braidprob import algebra as alg


def main(out_dir: str = ".") -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, make in (("super_line", alg.super_line), ("braided_line", alg.braided_line),
                       ("trivial", alg.trivial_algebra)):
        path = out / f"{name}.json"
        alg.dump_algebra(make(), path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main(*sys.argv[1:])
