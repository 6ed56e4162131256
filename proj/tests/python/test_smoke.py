"""Python smoke tests for the compiled extension."""

import numpy as np
import pytest

import egogrid as eg


def test_parse_and_step():
    level = eg.parse_level(".A.\n.+.\n.g.\n", eg.GameId.SIMPLE_ZELDA, "tiny")
    state = eg.init_state(level, seed=0, random_facing=False)
    (row, col), facing = eg.avatar_pose(state)
    assert (row, col) == (0, 1)
    assert facing == eg.Direction.UP

    reward, done = eg.step(state, eg.Action.DOWN)  # turn
    reward, done = eg.step(state, eg.Action.DOWN)  # move onto the key
    assert state.key_held
    assert reward == pytest.approx(1.0)
    reward, done = eg.step(state, eg.Action.DOWN)
    assert done
    assert state.status == eg.Status.WIN


def test_render_shapes_and_determinism():
    train, test = eg.builtin_sets(eg.GameId.ZELDA)
    assert len(train) == 5 and len(test) == 45
    state = eg.init_state(train.levels[0], seed=3, random_facing=True)
    cfg = eg.RenderConfig()
    cfg.tile_size = 4
    img = eg.render(state, cfg)
    assert img.shape == (3, 9 * 4, 13 * 4)
    assert img.dtype == np.uint8
    assert np.array_equal(img, eg.render(state, cfg))


def test_transform_pipeline():
    level = eg.enumerate_simple_zelda("left").levels[0]
    state = eg.init_state(level, seed=1, random_facing=False)
    rcfg = eg.RenderConfig()
    rcfg.tile_size = 1
    rcfg.out_height = 17
    rcfg.out_width = 25
    tcfg = eg.TransformConfig(translate=True)
    img, frame = eg.apply_pipeline(state, rcfg, tcfg)
    assert frame == "ego"
    assert img.shape == (3, 17, 25)
    # The avatar tile sits in the exact center after translation.
    center = img[:, 8, 12]
    assert tuple(center) == (255, 105, 180)

    with pytest.raises(Exception):
        eg.TransformConfig(crop=True)  # crop requires translate


def test_action_unrotation():
    assert eg.ego_to_world_action(eg.Action.UP, eg.Direction.RIGHT) == eg.Action.RIGHT
    for a in (eg.Action.UP, eg.Action.LEFT, eg.Action.DOWN, eg.Action.RIGHT):
        for f in (eg.Direction.UP, eg.Direction.RIGHT, eg.Direction.DOWN, eg.Direction.LEFT):
            w = eg.ego_to_world_action(a, f)
            assert eg.world_to_ego_action(w, f) == a


def test_level_counts():
    left = eg.enumerate_simple_zelda("left")
    right = eg.enumerate_simple_zelda("right")
    assert len(left) == 1190 and len(right) == 1190
    mirrored = {eg.serialize_level(eg.mirror_level(l)) for l in left.levels}
    assert mirrored == {eg.serialize_level(l) for l in right.levels}

    gen = eg.generate_levels(eg.GameId.BOULDERDASH, count=5, seed=7)
    assert len(gen) == 5
    for lvl in gen.levels:
        assert sum(row.count("x") for row in lvl.rows) >= 10
