"""Random models, statements and strings for the cross-check suites."""

import random

from hypothesis import strategies as st

from fsmrecon import Alt, Atom, Concat, Fsm, Observation, Star


def random_fsm(rng: random.Random, max_states=4, max_events=3, with_initial=None) -> Fsm:
    states = [f"S{i}" for i in range(rng.randint(1, max_states))]
    events = [f"e{i}" for i in range(rng.randint(1, max_events))]
    delta = {(q, e): rng.choice(states) for q in states for e in events}
    if with_initial is None:
        with_initial = rng.random() < 0.5
    initial = set(rng.sample(states, rng.randint(1, len(states)))) if with_initial else set()
    return Fsm(states, events, delta, initial)


def random_observation(rng, model):
    def pick(pool):
        return None if rng.random() < 0.5 else rng.choice(pool)

    return Observation(pick(model.states), pick(model.events), pick(model.states))


def random_expr(rng, model, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return Atom(random_observation(rng, model))
    kind = rng.choice(["concat", "alt", "star"])
    if kind == "star":
        return Star(random_expr(rng, model, depth - 1))
    children = [random_expr(rng, model, depth - 1) for _ in range(rng.randint(2, 3))]
    return Concat(children) if kind == "concat" else Alt(children)


def random_string(rng, alphabet, max_len):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


@st.composite
def fsms(draw, max_states=4, max_events=3):
    n = draw(st.integers(1, max_states))
    m = draw(st.integers(1, max_events))
    states = [f"S{i}" for i in range(n)]
    events = [f"e{i}" for i in range(m)]
    delta = {(q, e): draw(st.sampled_from(states)) for q in states for e in events}
    initial = draw(st.sets(st.sampled_from(states)))
    return Fsm(states, events, delta, initial)


def observations(model):
    def sym(pool):
        return st.one_of(st.none(), st.sampled_from(pool))

    return st.builds(Observation, sym(model.states), sym(model.events), sym(model.states))


def exprs(model):
    atoms = observations(model).map(Atom)
    return st.recursive(
        atoms,
        lambda inner: st.one_of(
            st.lists(inner, min_size=2, max_size=3).map(Concat),
            st.lists(inner, min_size=2, max_size=3).map(Alt),
            inner.map(Star),
        ),
        max_leaves=8,
    )
