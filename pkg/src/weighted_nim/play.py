"""Interactive human-vs-engine session over line-based IO.

The session alternates turns from a chosen start position.  Human moves are
entered as "p1 <count>" or "p2 <count>"; illegal entries are rejected with
the reason and re-prompted.  The engine plays the deterministic best_move
policy, so transcripts are reproducible.  Normal play: whoever makes the
final move wins; a closed input stream aborts with a partial transcript.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, TextIO

from .game import (
    MoveAction,
    Pile,
    Position,
    apply_move,
    as_position,
    legal_moves,
    move_rejection_reason,
    removal_bound,
    total_weight,
)
from .engine import best_move, grundy, winning_moves


class Actor(str, Enum):
    HUMAN = "human"
    ENGINE = "engine"

    def other(self) -> "Actor":
        return Actor.ENGINE if self is Actor.HUMAN else Actor.HUMAN


class TranscriptMove(NamedTuple):
    actor: Actor
    action: MoveAction
    resulting: Position


@dataclass
class SessionTranscript:
    initial: Position
    moves: list[TranscriptMove] = field(default_factory=list)
    winner: Optional[Actor] = None
    aborted: bool = False

    def to_dict(self) -> dict:
        return {
            "initial": list(self.initial),
            "moves": [
                {
                    "actor": tm.actor.value,
                    "move": str(tm.action),
                    "resulting": list(tm.resulting),
                }
                for tm in self.moves
            ],
            "winner": None if self.winner is None else self.winner.value,
            "aborted": self.aborted,
        }

    def write_json(self, path: Path | str) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n")


@dataclass(frozen=True)
class PlayConfig:
    start: Position
    engine_first: bool = False
    hints: bool = False


def parse_move(line: str) -> Optional[MoveAction]:
    """Parse "p1 <count>" / "p2 <count>" (case-insensitive); None if malformed."""
    parts = line.strip().lower().split()
    if len(parts) != 2 or parts[0] not in ("p1", "p2"):
        return None
    try:
        count = int(parts[1])
    except ValueError:
        return None
    return MoveAction(Pile.ONE if parts[0] == "p1" else Pile.TWO, count)


def describe_position(p: Position) -> str:
    return f"position x={p.x} y={p.y} W={total_weight(p)} bound={removal_bound(p)}"


def play_session(config: PlayConfig, stdin: TextIO, stdout: TextIO) -> SessionTranscript:
    """Run one session; returns the transcript (flagged if input closed)."""
    pos = as_position(config.start)
    transcript = SessionTranscript(initial=pos)
    actor = Actor.ENGINE if config.engine_first else Actor.HUMAN

    def say(text: str) -> None:
        stdout.write(text + "\n")

    say(describe_position(pos))
    while True:
        moves = legal_moves(pos)
        if not moves:
            transcript.winner = actor.other()
            mover = "you have" if actor is Actor.HUMAN else "the engine has"
            say(f"{mover} no legal move")
            say("you win" if transcript.winner is Actor.HUMAN else "engine wins")
            return transcript
        if actor is Actor.HUMAN:
            if config.hints:
                wins = winning_moves(pos)
                tip = ", ".join(str(m) for m in wins) if wins else "none"
                say(f"hint: grundy={grundy(pos)} winning moves: {tip}")
            stdout.write("your move (p1/p2 <count>)> ")
            stdout.flush()
            line = stdin.readline()
            if line == "":  # input stream closed
                transcript.aborted = True
                say("\ninput closed, aborting session")
                return transcript
            move = parse_move(line)
            if move is None:
                say("could not parse move; enter p1 <count> or p2 <count>")
                continue
            reason = move_rejection_reason(pos, move)
            if reason is not None:
                say(f"illegal move: {reason}")
                continue
        else:
            move = best_move(pos)
            say(f"engine plays {move}")
        pos = apply_move(pos, move)
        transcript.moves.append(TranscriptMove(actor, move, pos))
        say(describe_position(pos))
        actor = actor.other()


def replay_transcript(transcript: SessionTranscript) -> Position:
    """Re-apply every recorded move through the rules; returns the final
    position and raises if any recorded step is inconsistent."""
    pos = as_position(transcript.initial)
    for tm in transcript.moves:
        pos = apply_move(pos, tm.action)
        if pos != tm.resulting:
            raise ValueError(f"transcript mismatch: recorded {tm.resulting}, replayed {tuple(pos)}")
    if transcript.moves and not transcript.aborted:
        if transcript.winner != transcript.moves[-1].actor:
            raise ValueError("transcript winner is not the actor of the final move")
    return pos
