"""Session tests: parsing, rejection reasons, hints, transcripts, aborts."""

import io
import json

import pytest

from weighted_nim import MoveAction, Pile, Position
from weighted_nim.play import (
    Actor,
    PlayConfig,
    parse_move,
    play_session,
    replay_transcript,
    SessionTranscript,
    TranscriptMove,
)


def run_session(start, script, engine_first=False, hints=False):
    out = io.StringIO()
    transcript = play_session(
        PlayConfig(Position(*start), engine_first=engine_first, hints=hints),
        io.StringIO(script),
        out,
    )
    return transcript, out.getvalue()


def test_parse_move():
    assert parse_move("p1 2") == MoveAction(Pile.ONE, 2)
    assert parse_move("  P2   7 ") == MoveAction(Pile.TWO, 7)
    assert parse_move("p3 1") is None
    assert parse_move("p1") is None
    assert parse_move("p1 x") is None
    assert parse_move("") is None


def test_immediate_end_mover_loses():
    t, out = run_session((0, 0), "")
    assert t.moves == [] and t.winner is Actor.ENGINE and not t.aborted
    assert "engine wins" in out

    t, out = run_session((0, 0), "", engine_first=True)
    assert t.winner is Actor.HUMAN
    assert "you win" in out


def test_scripted_loss_to_engine():
    # (4,0): human plays p1 2, engine answers p1 1 to (1,0), human is stuck
    t, out = run_session((4, 0), "p1 2\n")
    assert [str(tm.action) for tm in t.moves] == ["p1 2", "p1 1"]
    assert t.moves[-1].resulting == (1, 0)
    assert t.winner is Actor.ENGINE
    assert "engine plays p1 1" in out
    assert "engine wins" in out
    assert replay_transcript(t) == (1, 0)


def test_engine_first_plays_winning_move():
    # engine on the N-position (2,3) must play p2 2 to the P-position (2,1)
    t, out = run_session((2, 3), "p2 1\n", engine_first=True)
    assert str(t.moves[0].action) == "p2 2"
    assert t.moves[0].resulting == (2, 1)
    assert t.winner is Actor.ENGINE
    assert "engine plays p2 2" in out


def test_illegal_entries_are_rejected_and_reprompted():
    script = "p2 1\nnope\np1 9\np1 3\np1 2\n"
    t, out = run_session((4, 0), script)
    assert "pile 2 is empty" in out
    assert "could not parse move" in out
    assert "pile 1 has only 4 stone(s)" in out
    assert "exceeds the weight bound" in out
    assert str(t.moves[0].action) == "p1 2"


def test_forced_minimum_rejection():
    t, out = run_session((0, 5), "p2 1\np2 5\n")
    assert "forced minimum removal from pile 2 is 3" in out
    assert t.moves[0].resulting == (0, 0)
    assert t.winner is Actor.HUMAN


def test_hint_mode_shows_grundy_and_winning_moves():
    _, out = run_session((2, 3), "p2 2\n", hints=True)
    assert "hint: grundy=3 winning moves: p2 2" in out
    # from a P-position the hint admits there is no winning move
    _, out = run_session((2, 1), "p2 1\n", hints=True)
    assert "hint: grundy=0 winning moves: none" in out


def test_eof_aborts_with_partial_transcript():
    t, out = run_session((4, 0), "p1 2\n" )
    assert not t.aborted  # game ended properly

    t, out = run_session((8, 3), "p1 1\n")
    # engine answered, then the script ran dry mid-game
    assert t.aborted and t.winner is None
    assert len(t.moves) >= 1
    assert "input closed" in out


def test_replay_detects_corruption():
    t, _ = run_session((4, 0), "p1 2\n")
    bad = SessionTranscript(
        initial=t.initial,
        moves=[TranscriptMove(t.moves[0].actor, t.moves[0].action, Position(9, 9))],
        winner=t.winner,
    )
    with pytest.raises(ValueError):
        replay_transcript(bad)


def test_transcript_json(tmp_path):
    t, _ = run_session((4, 0), "p1 2\n")
    path = tmp_path / "session.json"
    t.write_json(path)
    data = json.loads(path.read_text())
    assert data["initial"] == [4, 0]
    assert data["winner"] == "engine"
    assert data["moves"][0] == {"actor": "human", "move": "p1 2", "resulting": [2, 0]}
