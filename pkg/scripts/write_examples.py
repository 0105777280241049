import os
import sys
from pathlib import Path

from geo5.atlas import KEY_LEAVES, aff_x_r3, build_algebra, heis5
from geo5.schemas.lie_algebras import LieAlgebraDocument


# Output directory
OUTPUT_DIR = Path(os.getenv("GEO5_EXAMPLES_DIR", "data"))


def _slug(name: str) -> str:
    keep = [c if c.isalnum() else "_" for c in name]
    return "".join(keep).strip("_").lower()


def write_examples(output_dir: Path = OUTPUT_DIR) -> list[Path]:
    output_dir.mkdir(parents=True, exist_ok=True)
    algebras = {name: build_algebra(name) for name in KEY_LEAVES}
    # inputs the key rejects
    algebras["heis5"] = heis5()
    algebras["aff_x_r3"] = aff_x_r3()

    written = []
    for name, algebra in algebras.items():
        path = output_dir / f"{_slug(name)}.json"
        doc = LieAlgebraDocument.from_algebra(algebra)
        path.write_text(doc.model_dump_json(indent=2) + "\n", encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else OUTPUT_DIR
    for path in write_examples(target):
        print(f"wrote {path}")
