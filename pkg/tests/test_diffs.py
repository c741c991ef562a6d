import random

from notascope.diffs import token_diff
from notascope.metrics import lexeme_levenshtein, token_levenshtein
from notascope.tokenizer import TokenStream, tokenize


def stream_of(text, nid="na", eid="e"):
    return tokenize(text, "generic", nid, eid)


def test_self_diff_single_equal_run():
    s = stream_of("f(x, 1)")
    d = token_diff(s, s)
    assert d.token_ld == 0
    assert len(d.ops) == 1
    assert d.ops[0].op == "equal"


def test_single_replace():
    d = token_diff(stream_of("a"), stream_of("b"))
    assert d.token_ld == 1
    assert [o.op for o in d.ops] == ["replace"]
    assert d.ops[0].tokens_a == ("a",)
    assert d.ops[0].tokens_b == ("b",)


def test_paper_token_pair_single_replace():
    d = token_diff(stream_of("geom_point"), stream_of("geom_line"))
    assert d.token_ld == 1
    assert [o.op for o in d.ops] == ["replace"]


def test_ops_reconstruct_both_sides():
    a = stream_of("plot(x, y, color)")
    b = stream_of("plot(x, z, size, alpha)")
    d = token_diff(a, b)
    rebuilt_a = [t for o in d.ops for t in o.tokens_a]
    rebuilt_b = [t for o in d.ops for t in o.tokens_b]
    assert rebuilt_a == a.lexemes()
    assert rebuilt_b == b.lexemes()


def test_op_count_consistent_with_distance():
    rng = random.Random(17)
    alphabet = ["a", "b", "c", "d"]
    for _ in range(100):
        la = [rng.choice(alphabet) for _ in range(rng.randint(0, 8))]
        lb = [rng.choice(alphabet) for _ in range(rng.randint(0, 8))]
        d = token_diff(
            stream_of(" ".join(la)) if la else TokenStream("na", "x", ()),
            stream_of(" ".join(lb)) if lb else TokenStream("na", "y", ()),
        )
        cost = 0
        for o in d.ops:
            if o.op == "replace":
                cost += max(len(o.tokens_a), len(o.tokens_b))
            elif o.op == "insert":
                cost += len(o.tokens_b)
            elif o.op == "delete":
                cost += len(o.tokens_a)
        assert cost == d.token_ld == lexeme_levenshtein(la, lb)


def test_token_levenshtein_excludes_comments():
    a = tokenize("x = 1 # one", "python-like", "na", "a")
    b = tokenize("x = 1 # two", "python-like", "na", "b")
    assert token_levenshtein(a, b) == 0
