import pytest

from abjad import UnknownLetter, load_table, value_of
from abjad.tables import Script

ARABIC_VALUES = set(range(1, 10)) | set(range(10, 100, 10)) | set(range(100, 1000, 100)) | {1000}
HEBREW_VALUES = {v for v in ARABIC_VALUES if v <= 400}


@pytest.mark.parametrize(
    "script, size, values",
    [(Script.ARABIC, 28, ARABIC_VALUES), (Script.HEBREW, 22, HEBREW_VALUES)],
)
def test_value_sets(script, size, values):
    table = load_table(script)
    assert len(table) == size
    assert set(table.values) == values
    assert len(set(table.values)) == size


def test_arabic_value_sum():
    # 45 + 450 + 4500 + 1000, summed per decade by hand
    assert sum(load_table("arabic").values) == 5995


@pytest.mark.parametrize("script", list(Script))
def test_order_follows_value(script):
    letters = load_table(script).letters
    assert [l.order for l in letters] == list(range(1, len(letters) + 1))
    assert all(a.value < b.value for a, b in zip(letters, letters[1:]))


@pytest.mark.parametrize("script", list(Script))
def test_lookups_consistent(script):
    table = load_table(script)
    for letter in table:
        assert table.by_value[letter.value] is letter
        assert table.by_codepoint[letter.codepoint] is letter
        for variant in letter.variant_codepoints:
            assert table.by_codepoint[variant] is letter
    assert set(table.by_value) == set(table.values)


def test_table_rows():
    arabic = load_table("arabic")
    assert arabic.by_value[3].codepoint == "ج"
    assert arabic.by_value[3].sound == "Jim"
    assert arabic.by_value[1000].codepoint == "غ"
    assert arabic.by_value[400].codepoint == "ت"
    assert arabic.by_value[500].codepoint == "ث"
    hebrew = load_table("hebrew")
    assert hebrew.by_value[400].codepoint == "ת"
    assert hebrew.by_value[400].sound == "Tav"


def test_variants():
    arabic = load_table("arabic")
    for ch in "أإآٱ":
        assert arabic.by_codepoint[ch].value == 1
    assert arabic.by_codepoint["ى"].value == 10
    assert arabic.by_codepoint["ة"].value == 5
    assert load_table("arabic", "ta").by_codepoint["ة"].value == 400
    hebrew = load_table("hebrew")
    for final, base in zip("ךםןףץ", "כמנפצ"):
        assert hebrew.by_codepoint[final] is hebrew.by_codepoint[base]


def test_value_of():
    assert value_of("غ", "arabic") == 1000
    assert value_of("ا", "arabic") == 1
    assert value_of("ך", "hebrew") == 20
    assert value_of("ة", "arabic", taa_marbuta="ta") == 400
    with pytest.raises(UnknownLetter):
        value_of("x", "arabic")
    with pytest.raises(UnknownLetter):
        value_of("א", "arabic")
    with pytest.raises(ValueError):
        load_table("arabic", "bogus")
