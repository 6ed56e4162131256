#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "egogrid/errors.hpp"
#include "egogrid/harness.hpp"

namespace egogrid {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

struct ConfigKey {
    GameId game;
    int crop, translate, rotate;
    std::string avatar_mode;

    auto tie() const { return std::tie(game, crop, translate, rotate, avatar_mode); }
    bool operator<(const ConfigKey& o) const { return tie() < o.tie(); }
    bool operator==(const ConfigKey& o) const { return tie() == o.tie(); }
};

struct Agg {
    std::vector<double> train, test;

    static double mean(const std::vector<double>& v) {
        if (v.empty()) return 0.0;
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    }
    static double stdev(const std::vector<double>& v) {
        if (v.empty()) return 0.0;
        const double m = mean(v);
        double sq = 0.0;
        for (double x : v) sq += (x - m) * (x - m);
        return std::sqrt(sq / static_cast<double>(v.size()));
    }
};

}  // namespace

std::vector<SummaryRow> collect_summaries(const std::string& results_dir) {
    std::vector<fs::path> files;
    if (!fs::exists(results_dir)) {
        throw IoError("results directory " + results_dir + " does not exist");
    }
    for (const auto& entry : fs::recursive_directory_iterator(results_dir)) {
        if (entry.is_regular_file() && entry.path().filename() == "summary.csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<SummaryRow> rows;
    for (const fs::path& file : files) {
        std::ifstream in(file);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto f = split_csv_line(line);
            if (f.size() != 16) {
                throw IoError("bad summary row in " + file.string() + ": " + line);
            }
            SummaryRow row;
            row.run = f[0];
            row.game = game_id_from_string(f[1]);
            row.crop = std::stoi(f[2]);
            row.translate = std::stoi(f[3]);
            row.rotate = std::stoi(f[4]);
            row.avatar_mode = f[5];
            row.seed = std::stoull(f[6]);
            row.role = f[7];
            row.levels = std::stoi(f[8]);
            row.episodes_per_level = std::stoi(f[9]);
            row.wins = std::stoi(f[10]);
            row.losses = std::stoi(f[11]);
            row.timeouts = std::stoi(f[12]);
            row.win_rate = std::stod(f[13]);
            row.mean_length = std::stod(f[14]);
            row.mean_score = std::stod(f[15]);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<std::string> write_reports(const std::vector<SummaryRow>& rows,
                                       const std::string& out_dir) {
    if (rows.empty()) throw ConfigError("no summary rows to report");
    std::error_code ec;
    fs::create_directories(out_dir, ec);

    std::map<ConfigKey, Agg> by_config;
    for (const SummaryRow& r : rows) {
        ConfigKey key{r.game, r.crop, r.translate, r.rotate, r.avatar_mode};
        if (r.role == "train") {
            by_config[key].train.push_back(r.win_rate);
        } else {
            by_config[key].test.push_back(r.win_rate);
        }
    }

    std::vector<std::string> written;
    char buf[512];

    // Aggregated table, one row per configuration.
    {
        const std::string path = out_dir + "/table.csv";
        std::ofstream out(path, std::ios::binary);
        out << "game,crop,translate,rotate,avatar_mode,seeds,"
               "train_mean,train_std,test_mean,test_std\n";
        for (const auto& [key, agg] : by_config) {
            std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%s,%zu,%.6f,%.6f,%.6f,%.6f\n",
                          to_string(key.game).c_str(), key.crop, key.translate, key.rotate,
                          key.avatar_mode.c_str(), agg.train.size(), Agg::mean(agg.train),
                          Agg::stdev(agg.train), Agg::mean(agg.test), Agg::stdev(agg.test));
            out << buf;
        }
        written.push_back(path);
    }

    // Human-readable table in the transform-combination layout.
    {
        const std::string path = out_dir + "/table.txt";
        std::ofstream out(path, std::ios::binary);
        std::vector<GameId> games;
        for (const auto& [key, agg] : by_config) {
            if (std::find(games.begin(), games.end(), key.game) == games.end()) {
                games.push_back(key.game);
            }
        }
        out << "crop translate rotate";
        for (GameId g : games) {
            std::snprintf(buf, sizeof(buf), " | %-13s train / test", to_string(g).c_str());
            out << buf;
        }
        out << "\n";
        const int combos[6][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0},
                                  {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};
        for (const auto& combo : combos) {
            std::snprintf(buf, sizeof(buf), "%4d %9d %6d", combo[0], combo[1], combo[2]);
            out << buf;
            for (GameId g : games) {
                std::string cell = "--";
                for (const auto& [key, agg] : by_config) {
                    if (key.game == g && key.crop == combo[0] && key.translate == combo[1] &&
                        key.rotate == combo[2]) {
                        std::snprintf(buf, sizeof(buf), "%.1f+/-%.1f%% / %.1f+/-%.1f%%",
                                      100 * Agg::mean(agg.train), 100 * Agg::stdev(agg.train),
                                      100 * Agg::mean(agg.test), 100 * Agg::stdev(agg.test));
                        cell = buf;
                        break;
                    }
                }
                std::snprintf(buf, sizeof(buf), " | %-34s", cell.c_str());
                out << buf;
            }
            out << "\n";
        }
        written.push_back(path);
    }

    // Relative test performance against the all-off baseline per game (and
    // avatar mode).
    {
        const std::string path = out_dir + "/relative.csv";
        std::ofstream out(path, std::ios::binary);
        out << "game,avatar_mode,crop,translate,rotate,test_mean,baseline_test_mean,"
               "relative_points\n";
        for (const auto& [key, agg] : by_config) {
            ConfigKey base_key{key.game, 0, 0, 0, key.avatar_mode};
            auto it = by_config.find(base_key);
            if (it == by_config.end()) continue;
            const double base = Agg::mean(it->second.test);
            const double mine = Agg::mean(agg.test);
            std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%d,%.6f,%.6f,%.6f\n",
                          to_string(key.game).c_str(), key.avatar_mode.c_str(), key.crop,
                          key.translate, key.rotate, mine, base,
                          100.0 * (mine - base));
            out << buf;
        }
        written.push_back(path);
    }
    return written;
}

std::string merge_length_histograms(const std::string& results_dir,
                                    const std::string& out_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(results_dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("lengths_hist_", 0) == 0) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + out_path);
    out << "run,seed,role,length,count\n";
    for (const fs::path& file : files) {
        // lengths_hist_seed<S>_<role>.csv under <run>/
        const std::string run = file.parent_path().filename().string();
        std::string stem = file.stem().string();  // lengths_hist_seedS_role
        std::string rest = stem.substr(std::string("lengths_hist_seed").size());
        const size_t underscore = rest.find('_');
        const std::string seed = rest.substr(0, underscore);
        const std::string role = rest.substr(underscore + 1);
        std::ifstream in(file);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            if (!line.empty()) out << run << "," << seed << "," << role << "," << line << "\n";
        }
    }
    return out_path;
}

}  // namespace egogrid
