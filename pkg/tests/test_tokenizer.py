import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heapsize import _tokenize_py, tokenizer
from heapsize.tokenizer import (
    DigitPolicy,
    PunctuationPolicy,
    TokenRules,
    TypeInventory,
    build_inventory,
    merge_all,
    merge_inventories,
    tokenize,
)

TABLE2 = (
    "Гучин гуравдугаар зүйл. 1/Улсын Их Хурлын баталсан хууль, бусад шийдвэрт "
    "бүхэлд нь буюу зарим хэсэгт нь хориг тавих."
)

# Hand count of the sentence above: split on spaces, split "1/Улсын" on the
# slash, strip the trailing "." and ",", drop the pure-digit "1".
TABLE2_HAND = [
    "Гучин", "гуравдугаар", "зүйл", "Улсын", "Их", "Хурлын", "баталсан", "хууль",
    "бусад", "шийдвэрт", "бүхэлд", "нь", "буюу", "зарим", "хэсэгт", "нь", "хориг", "тавих",
]

text_chars = st.sampled_from(
    list("абвгдеёжзийклмноөпрстуүфхцчшщъыьэюяАБВӨҮ")
    + list("abcXYZ0123456789")
    + list(".,;:!?«»\"'()-–/\\_@#")
    + [" ", "\n", "\t", " ", " ", "　", "​", "́", "٣", "½"]
)
texts = st.text(text_chars, max_size=200)
rules = st.builds(
    TokenRules,
    st.sampled_from(list(DigitPolicy)),
    st.sampled_from(list(PunctuationPolicy)),
    st.booleans(),
)


def test_table2_sentence_hand_count():
    seq = tokenize(TABLE2)
    assert list(seq) == TABLE2_HAND
    inv = build_inventory(seq)
    assert (inv.token_total, inv.type_total) == (18, 17)
    assert inv.counts["нь"] == 2


def test_table2_keeps_digit_with_keep_all():
    seq = tokenize(TABLE2, TokenRules(digit_policy=DigitPolicy.KEEP_ALL))
    assert len(seq) == 19
    assert seq[3] == "1"


def test_keep_attached_leaves_raw_tokens():
    seq = tokenize(TABLE2, TokenRules(punctuation_policy=PunctuationPolicy.KEEP_ATTACHED))
    assert "зүйл." in seq and "1/Улсын" in seq and "хууль," in seq


@pytest.mark.parametrize(
    "text, expected",
    [
        ("", []),
        ("нь нь", ["нь", "нь"]),
        ("2019", []),
        ("2019 он", ["он"]),
        ("33-р анги", ["33-р", "анги"]),
        ("-5- «үг»", ["үг"]),
        ("a/b//c/", ["a", "b", "c"]),
        ("үг үг　үг", ["үг", "үг", "үг"]),
        ("  \n\t ", []),
    ],
)
def test_tokenize_examples(text, expected):
    assert list(tokenize(text)) == expected


def test_case_fold():
    assert list(tokenize("Улсын УЛСЫН", TokenRules(case_fold=True))) == ["улсын", "улсын"]
    assert list(tokenize("Улсын УЛСЫН")) == ["Улсын", "УЛСЫН"]


@settings(max_examples=400)
@given(texts, rules)
def test_compiled_kernel_matches_python(text, r):
    if tokenizer.KERNEL != "cython":
        pytest.skip("compiled kernel not built")
    assert tokenize(text, r) == tokenize(text, r, kernel=_tokenize_py)


@given(texts, rules)
def test_no_empty_and_no_pure_digit_tokens(text, r):
    seq = tokenize(text, r)
    assert all(seq)
    if r.digit_policy is DigitPolicy.EXCLUDE_PURE_DIGIT_TOKENS:
        assert not any(t.isascii() and t.isdigit() for t in seq)


@given(texts, rules)
def test_tokenize_idempotent(text, r):
    seq = tokenize(text, r)
    assert tokenize(" ".join(seq), r) == seq


@given(st.text(st.sampled_from(list("0123456789 \n\t")), max_size=80))
def test_digits_only_text_has_no_tokens(text):
    assert build_inventory(tokenize(text)).token_total == 0


def test_build_inventory_examples():
    inv = build_inventory(["нь", "нь"])
    assert inv.counts == {"нь": 2} and inv.token_total == 2 and inv.type_total == 1
    empty = build_inventory([])
    assert empty.token_total == 0 and empty.type_total == 0


def test_merge_examples():
    a = TypeInventory({"а": 1})
    b = TypeInventory({"а": 2, "б": 1})
    m = merge_inventories(a, b)
    assert m.counts == {"а": 3, "б": 1}
    assert (m.token_total, m.type_total) == (4, 2)
    assert merge_inventories(b, TypeInventory()) == b


def test_inventory_rejects_zero_counts():
    with pytest.raises(ValueError):
        TypeInventory({"а": 0})


inventories = st.dictionaries(st.sampled_from(list("абвгдеж")), st.integers(1, 5), max_size=7).map(TypeInventory)


@given(inventories, inventories, inventories)
def test_merge_algebra(a, b, c):
    assert merge_inventories(a, b) == merge_inventories(b, a)
    assert merge_inventories(merge_inventories(a, b), c) == merge_inventories(a, merge_inventories(b, c))
    m = merge_inventories(a, b)
    assert max(a.type_total, b.type_total) <= m.type_total <= a.type_total + b.type_total
    assert m.token_total == a.token_total + b.token_total
    assert m.type_total <= m.token_total
    assert merge_all([a, b, c]) == merge_inventories(m, c)
