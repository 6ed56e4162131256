#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egogrid/checkpoint.hpp"
#include "egogrid/games.hpp"
#include "egogrid/harness.hpp"
#include "egogrid/transforms.hpp"

namespace py = pybind11;
using namespace egogrid;

namespace {

py::array_t<uint8_t> obs_to_array(const Observation& obs) {
    py::array_t<uint8_t> arr({obs.channels, obs.height, obs.width});
    std::copy(obs.pixels.begin(), obs.pixels.end(), arr.mutable_data());
    return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tile-game simulation, egocentric observation transforms and the A2C harness";

    py::enum_<GameId>(m, "GameId")
        .value("SIMPLE_ZELDA", GameId::SimpleZelda)
        .value("ZELDA", GameId::Zelda)
        .value("BOULDERDASH", GameId::Boulderdash)
        .value("DSOLARFOX", GameId::DSolarfox);

    py::enum_<Direction>(m, "Direction")
        .value("UP", Direction::Up)
        .value("RIGHT", Direction::Right)
        .value("DOWN", Direction::Down)
        .value("LEFT", Direction::Left);

    py::enum_<Action>(m, "Action")
        .value("NOOP", Action::Noop)
        .value("UP", Action::Up)
        .value("RIGHT", Action::Right)
        .value("DOWN", Action::Down)
        .value("LEFT", Action::Left)
        .value("USE", Action::Use);

    py::enum_<Status>(m, "Status")
        .value("RUNNING", Status::Running)
        .value("WIN", Status::Win)
        .value("LOSS", Status::Loss);

    py::class_<LevelSpec>(m, "LevelSpec")
        .def_readonly("game", &LevelSpec::game)
        .def_readonly("rows", &LevelSpec::rows)
        .def_readonly("name", &LevelSpec::name)
        .def_property_readonly("height", &LevelSpec::height)
        .def_property_readonly("width", &LevelSpec::width)
        .def("__repr__", [](const LevelSpec& l) {
            return "<LevelSpec " + l.name + " " + std::to_string(l.height()) + "x" +
                   std::to_string(l.width()) + ">";
        });

    py::class_<LevelSet>(m, "LevelSet")
        .def_readonly("levels", &LevelSet::levels)
        .def("__len__", [](const LevelSet& s) { return s.levels.size(); });

    py::class_<GameState>(m, "GameState")
        .def_property_readonly("avatar",
                               [](const GameState& s) {
                                   return py::make_tuple(s.avatar.row, s.avatar.col);
                               })
        .def_readonly("facing", &GameState::facing)
        .def_readonly("score", &GameState::score)
        .def_readonly("tick", &GameState::tick)
        .def_readonly("status", &GameState::status)
        .def_readonly("key_held", &GameState::key_held)
        .def_readonly("diamonds_collected", &GameState::diamonds_collected)
        .def_property_readonly("done", &GameState::done)
        .def("serialize", &serialize_state);

    py::class_<RulesetParams>(m, "RulesetParams")
        .def(py::init<>())
        .def_readwrite("enemy_move_period", &RulesetParams::enemy_move_period)
        .def_readwrite("fire_period", &RulesetParams::fire_period)
        .def_readwrite("diamond_quota", &RulesetParams::diamond_quota);

    py::class_<RenderConfig>(m, "RenderConfig")
        .def(py::init<>())
        .def_readwrite("tile_size", &RenderConfig::tile_size)
        .def_readwrite("out_height", &RenderConfig::out_height)
        .def_readwrite("out_width", &RenderConfig::out_width)
        .def_property(
            "avatar_mode",
            [](const RenderConfig& c) {
                return c.avatar_mode == AvatarMode::Original        ? "original"
                       : c.avatar_mode == AvatarMode::ReplaceAvatar ? "replace_avatar"
                                                                    : "replace_all";
            },
            [](RenderConfig& c, const std::string& v) {
                if (v == "original") {
                    c.avatar_mode = AvatarMode::Original;
                } else if (v == "replace_avatar") {
                    c.avatar_mode = AvatarMode::ReplaceAvatar;
                } else if (v == "replace_all") {
                    c.avatar_mode = AvatarMode::ReplaceAll;
                } else {
                    throw py::value_error("avatar_mode: original|replace_avatar|replace_all");
                }
            })
        .def_property(
            "gray", [](const RenderConfig& c) { return c.color == ColorMode::Gray; },
            [](RenderConfig& c, bool gray) {
                c.color = gray ? ColorMode::Gray : ColorMode::RGB;
            });

    py::class_<TransformConfig>(m, "TransformConfig")
        .def(py::init([](bool translate, bool rotate, bool crop, int crop_size) {
                 TransformConfig t;
                 t.translate = translate;
                 t.rotate = rotate;
                 t.crop = crop;
                 t.crop_size = crop_size;
                 t.validate();
                 return t;
             }),
             py::arg("translate") = false, py::arg("rotate") = false, py::arg("crop") = false,
             py::arg("crop_size") = 5)
        .def_readwrite("translate", &TransformConfig::translate)
        .def_readwrite("rotate", &TransformConfig::rotate)
        .def_readwrite("crop", &TransformConfig::crop)
        .def_readwrite("crop_size", &TransformConfig::crop_size)
        .def("validate", &TransformConfig::validate);

    m.def("parse_level", &parse_level, py::arg("text"), py::arg("game"),
          py::arg("name") = "");
    m.def("serialize_level", &serialize_level);
    m.def("mirror_level", &mirror_level);
    m.def("enumerate_simple_zelda",
          [](const std::string& side, int rows, int cols) {
              return enumerate_simple_zelda(side == "left" ? Side::Left : Side::Right, rows,
                                            cols);
          },
          py::arg("side"), py::arg("interior_rows") = 7, py::arg("interior_cols") = 11);
    m.def("generate_levels",
          [](GameId game, int count, uint64_t seed) {
              return generate_levels(game, count, seed);
          },
          py::arg("game"), py::arg("count"), py::arg("seed"));
    m.def("builtin_sets", [](GameId game) {
        SplitSets s = builtin_sets(game);
        return py::make_tuple(s.train, s.test);
    });

    m.def("init_state", &init_state, py::arg("level"), py::arg("seed"),
          py::arg("random_facing") = false);
    m.def(
        "step",
        [](GameState& state, Action action, const RulesetParams& params) {
            StepResult r = step(state, action, params);
            return py::make_tuple(r.reward, r.done);
        },
        py::arg("state"), py::arg("action"), py::arg("params") = RulesetParams{});
    m.def("avatar_pose", [](const GameState& s) {
        return py::make_tuple(py::make_tuple(s.avatar.row, s.avatar.col), s.facing);
    });
    m.def("action_set", [](GameId game) { return ruleset_for(game).action_set(); });

    m.def(
        "render",
        [](const GameState& state, const RenderConfig& cfg) {
            return obs_to_array(render(state, cfg));
        },
        py::arg("state"), py::arg("config") = RenderConfig{});
    m.def(
        "apply_pipeline",
        [](const GameState& state, const RenderConfig& rcfg, const TransformConfig& tcfg) {
            EgoObservation ego = apply_pipeline(state, rcfg, tcfg);
            return py::make_tuple(obs_to_array(ego.obs),
                                  ego.frame == Frame::Ego ? "ego" : "world");
        },
        py::arg("state"), py::arg("render_config") = RenderConfig{},
        py::arg("transform_config") = TransformConfig{});
    m.def("ego_to_world_action", &ego_to_world_action);
    m.def("world_to_ego_action", &world_to_ego_action);
    m.def("write_png", [](const std::string& path, const GameState& state,
                          const RenderConfig& cfg) { write_png(path, render(state, cfg)); });

    m.def("load_experiment_config", &load_experiment_config);
    m.def("run_experiment", [](const std::string& config_path) {
        RunResult r = run_experiment(load_experiment_config(config_path));
        py::dict out;
        out["run_dir"] = r.run_dir;
        out["train_win_rate"] = r.mean_win_rate(LevelRole::Train);
        out["test_win_rate"] = r.mean_win_rate(LevelRole::Test);
        return out;
    });
}
