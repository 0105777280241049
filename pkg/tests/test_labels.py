import pytest

from geo5.errors import InvalidParameter
from geo5.labels import (
    LensBundle,
    Named,
    SL2xS3,
    SL2xSL2,
    Sol4mnxE,
    Sol5Complex,
    Sol5Diag,
    format_param,
    label_adapter,
    parse_label,
)


def test_family_names_parse_to_family_labels():
    assert parse_label("A5,7^{a,b,-1-a-b}") == Sol5Diag()
    assert parse_label("~SL_2 x_alpha S^3").is_family
    assert parse_label("Sol^4_{m,n} x E") == Sol4mnxE()


def test_instances_parse():
    assert parse_label("L(2;1) x_S1 L(3;1)") == LensBundle(a=2, b=3)
    assert parse_label("~SL_2 x_{3/4} S^3") == SL2xS3(alpha="3/4")
    assert parse_label("Sol^4_{6,5} x E") == Sol4mnxE(m=6, n=5)
    label = parse_label("A5,7^{a,b,-1-a-b}(1, 2/3, 1/3, -2)")
    assert label == Sol5Diag(roots=("1", "2/3", "1/3", "-2"))
    assert str(label) == "A5,7^{a,b,-1-a-b}(1, 2/3, 1/3, -2)"


def test_other_text_is_a_name():
    assert parse_label("Heis_5") == Named(name="Heis_5")


@pytest.mark.parametrize(
    "build",
    [
        lambda: LensBundle(a=2, b=4),
        lambda: LensBundle(a=3, b=2),
        lambda: LensBundle(a=1),
        lambda: SL2xS3(alpha="-1"),
        lambda: SL2xS3(alpha="pi"),
        lambda: SL2xSL2(alpha="3/2"),
        lambda: Sol5Diag(roots=("1", "2")),
        lambda: Sol5Complex(real_roots=("1", "-1")),
        lambda: Sol4mnxE(m=3),
    ],
)
def test_out_of_range_parameters(build):
    with pytest.raises(InvalidParameter):
        build()


def test_compact_quotients():
    assert SL2xS3(alpha="3/4").compact_quotients is True
    assert SL2xS3(alpha="irrational").compact_quotients is False
    assert SL2xS3().compact_quotients is None


def test_json_round_trip_through_union():
    labels = [
        Named(name="A5,2"),
        LensBundle(a=1, b=2),
        SL2xSL2(alpha="1/2"),
        Sol5Complex(real_roots=("1", "-1/2"), complex_real_part="-1/4", complex_imag_part="1"),
    ]
    for label in labels:
        data = label_adapter.dump_json(label)
        assert label_adapter.validate_json(data) == label


def test_format_param():
    assert format_param(0.5) == "0.5"
    assert format_param(-0.0) == "0"
    assert format_param(2) == "2"
