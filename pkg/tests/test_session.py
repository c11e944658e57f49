from pathlib import Path

import pytest

from gnice.core.monomial import MonomialOrder
from gnice.core.session import Session, SessionFile
from gnice.exceptions import InputError, ParseError, PreconditionError

SESSIONS = Path(__file__).parent / "sessions"


@pytest.fixture
def running() -> Session:
    return Session.load(str(SESSIONS / "running.gni"))


def test_load_running_session(running):
    assert str(running.ring) == "QQ[x,y,z]"
    assert running.order == MonomialOrder.degrevlex(3)
    assert len(running.ideal("I")) == 2
    assert running.ideal("empty").is_zero()
    assert running.polynomial("f") == running.polynomial("y^3")
    assert list(running.ideals) == ["J", "E", "I", "E1", "E2", "S", "Z", "empty"]


def test_order_override(running):
    assert running.order_for(None) == running.order
    assert running.order_for("lex(z>y>x)") == MonomialOrder.lex(3, [2, 1, 0])


def test_polynomials_from_names_and_text(running):
    assert running.polynomials("E1") == list(running.ideal("E1").generators)
    assert running.polynomials("f, x") == [running.polynomial("y^3"), running.polynomial("x")]


def test_unknown_names(running):
    with pytest.raises(InputError, match="unknown ideal 'K'"):
        running.ideal("K")
    with pytest.raises(InputError, match="unknown basis"):
        running.basis_for("J", "H", running.order)


def test_basis_for(running):
    given = running.basis_for("J", "G", running.order)
    assert given.generators == running.basis_for("J", None, running.order).generators
    bad = Session.from_text("ring x,y\nideal J = x^2\ngb G = x^2+y, x*y\n")
    with pytest.raises(PreconditionError):
        bad.basis_for("J", "G", bad.order)


def test_monomial_ideal(running):
    assert running.monomial_ideal("S", running.order).generators == ((1, 1, 0), (0, 1, 2), (0, 3, 0))
    mixed = Session.from_text("ring x,y\nideal M = x^2 + x*y, x*y\n")
    assert mixed.monomial_ideal("M", mixed.order).generators == ((1, 1), (2, 0))
    with pytest.raises(PreconditionError, match="not a monomial ideal"):
        running.monomial_ideal("J", running.order)


def test_defaults():
    source = SessionFile.from_text("ring a, b\n")
    assert source.coefficients == "QQ"
    assert source.order == "degrevlex"
    assert Session(source).ring.variables == ("a", "b")


@pytest.mark.parametrize(
    "text",
    [
        "ideal J = x\n",
        "ring x,y\nring x,y\n",
        "ring x,y\nideal J x\n",
        "ring x,y\nideal J = x\npoly J = y\n",
        "ring x,y\nmatrix M = x\n",
        "ring x,y\nideal J = x + w\n",
        "ring x,y\norder deglex\n",
        "ring x,y\nideal 1J = x\n",
        "ring x,y over RR\n",
    ],
)
def test_malformed_sessions(text):
    with pytest.raises(InputError):
        Session.from_text(text)


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read session file"):
        Session.load(str(tmp_path / "absent.gni"))


def test_comments_are_ignored():
    session = Session.from_text("# header\nring x,y  # two variables\nideal J = x^2 # principal\n")
    assert session.ideal("J").generators == (session.polynomial("x^2"),)


def test_line_numbers_in_errors():
    with pytest.raises(ParseError, match="line 2"):
        Session.from_text("ring x,y\nideal = x\n")
