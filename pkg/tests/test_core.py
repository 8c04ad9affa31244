from __future__ import annotations

import random

import pytest

from construal.core import (
    Construal,
    format_construal,
    is_congruent,
    make_construal,
    parse_construal,
    simplify_chain,
)
from construal.exceptions import NotationError, UnknownLabelError


def test_make_construal_accepts_role_function_pair(hierarchy) -> None:
    c = make_construal(hierarchy, "Stimulus", ["Topic"])
    assert c.role == "Stimulus"
    assert c.functions == ("Topic",)
    assert not c.metaphoric


def test_make_construal_accepts_congruent_pair(hierarchy) -> None:
    c = make_construal(hierarchy, "Time", ["Time"])
    assert is_congruent(c)


def test_make_construal_accepts_two_step_chain(hierarchy) -> None:
    c = make_construal(hierarchy, "Recipient", ["Beneficiary", "Goal"])
    assert c.functions == ("Beneficiary", "Goal")


def test_make_construal_rejects_unknown_role(hierarchy) -> None:
    with pytest.raises(UnknownLabelError):
        make_construal(hierarchy, "Stimulous", ["Topic"])


def test_make_construal_rejects_unknown_function(hierarchy) -> None:
    with pytest.raises(UnknownLabelError):
        make_construal(hierarchy, "Stimulus", ["Topik"])


def test_make_construal_rejects_immediate_repetition(hierarchy) -> None:
    with pytest.raises(ValueError):
        make_construal(hierarchy, "Theme", ["Superset", "Superset"])


def test_nonadjacent_repetition_is_allowed(hierarchy) -> None:
    c = make_construal(hierarchy, "Theme", ["Superset", "Location", "Superset"])
    assert len(c.functions) == 3


def test_is_congruent_true_for_identical_single_function() -> None:
    assert is_congruent(Construal("Topic", ("Topic",)))


def test_is_congruent_false_for_mismatch() -> None:
    assert not is_congruent(Construal("Destination", ("Location",)))


def test_is_congruent_false_for_null_function() -> None:
    assert not is_congruent(Construal("Experiencer", ()))


def test_is_congruent_false_for_chain_through_own_label() -> None:
    assert not is_congruent(Construal("Topic", ("Topic", "Location")))


def test_parse_single_function() -> None:
    assert parse_construal("Stimulus~>Causer") == Construal("Stimulus", ("Causer",))


def test_parse_bare_role_is_null_function() -> None:
    c = parse_construal("Location")
    assert c == Construal("Location", ())
    assert c.null_function


def test_parse_metaphor_flag() -> None:
    c = parse_construal("EndState~>Location!m")
    assert c == Construal("EndState", ("Location",), metaphoric=True)


def test_parse_ignores_surrounding_whitespace() -> None:
    assert parse_construal("  Stimulus ~> Topic  ") == Construal("Stimulus", ("Topic",))


def test_parse_rejects_empty_text() -> None:
    with pytest.raises(NotationError):
        parse_construal("   ")


def test_parse_rejects_trailing_arrow() -> None:
    with pytest.raises(NotationError) as exc:
        parse_construal("Stimulus~>")
    assert exc.value.offset >= 0


def test_parse_rejects_interior_metaphor_flag() -> None:
    with pytest.raises(NotationError):
        parse_construal("EndState!m~>Location")


def test_parse_rejects_whitespace_inside_label() -> None:
    with pytest.raises(NotationError):
        parse_construal("End State~>Location")


def test_format_single() -> None:
    assert format_construal(Construal("Stimulus", ("Topic",))) == "Stimulus~>Topic"


def test_format_chain_with_metaphor() -> None:
    c = Construal("Recipient", ("Beneficiary", "Goal"), metaphoric=True)
    assert format_construal(c) == "Recipient~>Beneficiary~>Goal!m"


def test_parse_format_round_trip_fixed_cases() -> None:
    for text in (
        "Location",
        "Time~>Time",
        "Stimulus~>Topic",
        "Recipient~>Beneficiary~>Goal",
        "EndState~>Location!m",
        "Theme~>Superset~>Location",
    ):
        assert format_construal(parse_construal(text)) == text


def test_parse_format_round_trip_randomized(hierarchy) -> None:
    rng = random.Random(20260808)
    labels = sorted(hierarchy)
    for _ in range(500):
        role = rng.choice(labels)
        chain: list[str] = []
        for _ in range(rng.randint(0, 3)):
            candidate = rng.choice(labels)
            if chain and chain[-1] == candidate:
                continue
            chain.append(candidate)
        c = Construal(role, tuple(chain), metaphoric=rng.random() < 0.2)
        assert parse_construal(format_construal(c)) == c


def test_simplify_keep_first_two() -> None:
    c = Construal("Theme", ("Superset", "Location"))
    assert simplify_chain(c, "keep-first-two") == Construal("Theme", ("Superset",))


def test_simplify_keep_ends() -> None:
    c = Construal("Stimulus", ("Beneficiary", "Goal"))
    assert simplify_chain(c, "keep-ends") == Construal("Stimulus", ("Goal",))


def test_simplify_leaves_short_chains_alone() -> None:
    for notation in ("Time~>Time", "Location"):
        c = parse_construal(notation)
        assert simplify_chain(c, "keep-first-two") == c
        assert simplify_chain(c, "keep-ends") == c


def test_simplify_preserves_metaphor_flag() -> None:
    c = Construal("EndState", ("Superset", "Location"), metaphoric=True)
    assert simplify_chain(c, "keep-ends").metaphoric


def test_simplify_on_congruent_is_identity() -> None:
    c = Construal("Topic", ("Topic",))
    for policy in ("keep-first-two", "keep-ends"):
        assert simplify_chain(c, policy) == c


def test_simplify_rejects_unknown_policy() -> None:
    with pytest.raises(ValueError):
        simplify_chain(Construal("Topic", ("Topic",)), "keep-middle")
