"""The networked printer of the ACME case as a system model.

The print job directory is a row of slots, each holding one of
``E`` (empty), ``A``/``B`` (an active job from Alice/Bob) or
``Del_A``/``Del_B`` (a printed job, marked deleted, owner kept).

Events:

* ``Add_X`` - user X submits a job.  It goes into the first unallocated
  slot.  A user with an active job cannot submit another, so the event
  leaves the directory unchanged.
* ``Take`` - the printer prints the first active job and marks its slot
  deleted.

Deleted slots count as unallocated by default, so a new job overwrites
the first deleted entry.  Pass ``deleted_is_free=False`` for the reading
where only ``E`` slots can be reused.
"""

from __future__ import annotations

import itertools
from enum import Enum

from .errors import ReconError
from .fsm import Fsm, check

EVENTS = ("Add_A", "Add_B", "Take")
MAX_SLOTS = 4


class SlotState(Enum):
    E = "E"
    A = "A"
    B = "B"
    Del_A = "Del_A"
    Del_B = "Del_B"

    def __str__(self):
        return self.value


_ACTIVE = {SlotState.A, SlotState.B}
_DELETED = {SlotState.A: SlotState.Del_A, SlotState.B: SlotState.Del_B}
_JOB = {"Add_A": SlotState.A, "Add_B": SlotState.B}


def printer_delta(slots, event: str, deleted_is_free: bool = True) -> tuple:
    slots = tuple(SlotState(s) for s in slots)
    if event == "Take":
        for i, s in enumerate(slots):
            if s in _ACTIVE:
                return slots[:i] + (_DELETED[s],) + slots[i + 1:]
        return slots
    if event not in _JOB:
        raise ReconError(f"unknown printer event {event!r}")
    job = _JOB[event]
    if job in slots:
        return slots
    free = {SlotState.E}
    if deleted_is_free:
        free |= {SlotState.Del_A, SlotState.Del_B}
    for i, s in enumerate(slots):
        if s in free:
            return slots[:i] + (job,) + slots[i + 1:]
    return slots


def state_name(slots) -> str:
    return ".".join(SlotState(s).value for s in slots)


def empty_state(num_slots: int = 2) -> str:
    return state_name([SlotState.E] * num_slots)


def build_printer(num_slots: int = 2, deleted_is_free: bool = True) -> Fsm:
    """Printer model over ``num_slots`` directory entries, starting empty."""
    if not isinstance(num_slots, int) or not 1 <= num_slots <= MAX_SLOTS:
        raise ReconError(f"num_slots must be between 1 and {MAX_SLOTS}, got {num_slots!r}")
    all_slots = list(itertools.product(SlotState, repeat=num_slots))
    delta = {
        (state_name(s), e): state_name(printer_delta(s, e, deleted_is_free))
        for s in all_slots
        for e in EVENTS
    }
    model = Fsm(
        states=[state_name(s) for s in all_slots],
        events=EVENTS,
        delta=delta,
        initial={empty_state(num_slots)},
    )
    return check(model)


def case_evidence(num_slots: int = 2) -> tuple[str, str]:
    """Start and final states observed by the administrator.

    The directory started empty and was found holding two deleted Bob jobs
    with every other entry empty.
    """
    if num_slots < 2:
        raise ReconError("the observed directory needs at least two slots")
    final = [SlotState.Del_B, SlotState.Del_B] + [SlotState.E] * (num_slots - 2)
    return empty_state(num_slots), state_name(final)
