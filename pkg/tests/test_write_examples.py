from geo5.atlas import KEY_LEAVES
from geo5.classify import Classification, NotInKey, classify_solvable5
from geo5.schemas.lie_algebras import LieAlgebraDocument
from scripts.write_examples import write_examples


def test_written_documents_classify(tmp_path):
    paths = write_examples(tmp_path)
    assert len(paths) == len(KEY_LEAVES) + 2
    results = {}
    for path in paths:
        doc = LieAlgebraDocument.model_validate_json(path.read_text(encoding="utf-8"))
        results[path.stem] = classify_solvable5(doc.to_algebra())
    assert isinstance(results["a5_2"], Classification)
    assert isinstance(results["heis5"], NotInKey)
    assert isinstance(results["aff_x_r3"], NotInKey)
    assert sum(isinstance(r, Classification) for r in results.values()) == len(KEY_LEAVES)
