#!/usr/bin/env python3
"""Smoke test for the nilmult Python extension.

Builds nothing itself: run `cargo build -p nilmult-py` (or --release) first.
The script locates the compiled cdylib, exposes it under the importable name
`nilmult`, and exercises the main entry points.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    candidates = [
        REPO_ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libnilmult.so", "libnilmult.dylib", "nilmult.dll")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit("extension not found; run `cargo build -p nilmult-py` first")


def main() -> None:
    ext = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="nilmult-py-"))
    suffix = ".pyd" if ext.suffix == ".dll" else ".so"
    shutil.copy2(ext, staging / f"nilmult{suffix}")
    sys.path.insert(0, str(staging))

    import nilmult

    # collection engine: ba = ab [a,b]^{-1}
    ba = nilmult.NfElement.from_word("b a")
    assert ba.exponents() == ["1", "1", "-1", "0", "0", "0", "0", "0"], ba.exponents()
    ab = nilmult.NfElement.from_word("a b")
    assert ba.mul(ba.inv()).is_identity()
    assert ab.pow(2).exponents() == ["2", "2", "-1", "0", "-1", "0", "0", "0"]
    a = nilmult.NfElement.from_word("a")
    b = nilmult.NfElement.from_word("b")
    assert a.pow(2).comm(b).exponents() == ["0", "0", "2", "1", "0", "0", "0", "0"]

    # classification
    info = nilmult.classify(3, (2, 2, 1, 1, 0))
    assert info["canonical"] == [2, 2, 1, 0, 1], info
    assert info["family"] == "2"
    assert info["label"] == "K5"
    assert info["capable"] is False and info["two_capable"] is False

    info = nilmult.classify(3, (2, 2, 2, 2, 2))
    assert info["label"] == "G1" and info["capable"] is True

    # multipliers: closed form vs oracle
    assert nilmult.multiplier_closed(3, (1, 1, 1, 1, 1)) == ["3", "3", "3", "3", "3"]
    assert nilmult.multiplier_oracle(3, (1, 1, 1, 1, 1)) == ["3", "3", "3", "3", "3"]
    assert nilmult.multiplier_closed(2, (1, 1, 1, 1, 1)) is None  # no closed form
    assert nilmult.multiplier_oracle(2, (1, 1, 1, 1, 1)) == ["2", "4"]

    # relator file text (order-8 dihedral, rotation/reflection presentation)
    inv = nilmult.multiplier_from_relators(
        2, "a^4\nb^2\n[a,b] a^2\n[a,b,a]\n[a,b,b]\n"
    )
    assert inv == ["2", "4"], inv

    # epicenter
    witness, member = nilmult.epicenter(3, (2, 1, 1, 0, 1))
    assert witness == "a^3" and member is True
    witness, member = nilmult.epicenter(3, (2, 2, 2, 2, 2))
    assert witness is None and member is None

    # errors surface as ValueError
    try:
        nilmult.multiplier_oracle(4, (1, 1, 1, 0, 0))
    except ValueError as err:
        assert "not prime" in str(err)
    else:
        sys.exit("expected ValueError for p = 4")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
