#include "eqas/config.hpp"

#include <fstream>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "eqas/errors.hpp"

namespace eqas::config {

namespace pt = boost::property_tree;

RunConfig defaults_for(const std::string &env_name) {
    RunConfig cfg;
    cfg.env = envs::EnvSpec::from_name(env_name);
    cfg.train = rl::TrainConfig::defaults_for(cfg.env);
    cfg.search.base_episodes = cfg.train.episodes;
    return cfg;
}

void apply_seed(RunConfig &cfg, std::uint64_t seed) {
    cfg.seed = seed;
    cfg.search.seed = seed;
    cfg.train.seed = seed;
}

namespace {

const std::set<std::string> kKnownKeys = {
    "run.env",           "run.seed",           "run.out",
    "run.workers",       "env.reward_shaping", "search.pop_size",
    "search.generations", "search.max_len",     "search.episode_factor",
    "search.base_episodes", "search.crossover_prob", "search.mutation_prob",
    "search.mutation_eta", "train.episodes",     "train.batch_size",
    "train.lr_theta",    "train.lr_lambda",    "train.lr_weights",
    "train.gamma",       "train.use_baseline", "train.beta",
    "train.preprocessing", "train.optimizer",  "train.return_scaling",
};

template <typename T> void read(const pt::ptree &tree, const std::string &key, T &out) {
    const auto node = tree.get_optional<std::string>(key);
    if (!node) {
        return;
    }
    const auto value = tree.get_optional<T>(key);
    if (!value) {
        throw ConfigError(key + ": cannot parse '" + *node + "'");
    }
    out = *value;
}

template <typename Fn> void checked(const std::string &key, Fn &&fn) {
    try {
        fn();
    } catch (const ConfigError &e) {
        throw ConfigError(key + ": " + e.what());
    }
}

} // namespace

RunConfig parse_run_config(std::istream &in) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    for (const auto &[section, body] : tree) {
        if (body.empty()) {
            throw ConfigError(section + ": keys must live inside a [section]");
        }
        for (const auto &[key, value] : body) {
            if (!kKnownKeys.contains(section + "." + key)) {
                throw ConfigError(section + "." + key + ": unknown key");
            }
        }
    }

    const auto env_name = tree.get_optional<std::string>("run.env");
    if (!env_name || env_name->empty()) {
        throw ConfigError("run.env: missing environment name");
    }
    RunConfig cfg;
    checked("run.env", [&] { cfg = defaults_for(*env_name); });

    if (const auto shaping = tree.get_optional<std::string>("env.reward_shaping")) {
        if (*shaping == "height") {
            cfg.env.shaping = envs::RewardShaping::Height;
        } else if (*shaping == "standard") {
            cfg.env.shaping = envs::RewardShaping::Standard;
        } else {
            throw ConfigError("env.reward_shaping: expected height|standard, got '" + *shaping + "'");
        }
    }

    std::uint64_t seed = 0;
    read(tree, "run.seed", seed);
    std::string out = cfg.out_dir.string();
    read(tree, "run.out", out);
    cfg.out_dir = out;
    read(tree, "run.workers", cfg.search.workers);

    auto &s = cfg.search;
    read(tree, "search.pop_size", s.pop_size);
    read(tree, "search.generations", s.generations);
    read(tree, "search.max_len", s.max_len);
    read(tree, "search.episode_factor", s.episode_factor);
    read(tree, "search.base_episodes", s.base_episodes);
    read(tree, "search.crossover_prob", s.crossover_prob);
    double mutation_prob = -1.0;
    read(tree, "search.mutation_prob", mutation_prob);
    if (tree.get_optional<std::string>("search.mutation_prob")) {
        s.mutation_prob = mutation_prob;
    }
    read(tree, "search.mutation_eta", s.mutation_eta);

    auto &t = cfg.train;
    read(tree, "train.episodes", t.episodes);
    read(tree, "train.batch_size", t.batch_size);
    read(tree, "train.lr_theta", t.lr_theta);
    read(tree, "train.lr_lambda", t.lr_lambda);
    read(tree, "train.lr_weights", t.lr_weights);
    read(tree, "train.gamma", t.gamma);
    read(tree, "train.use_baseline", t.use_baseline);
    read(tree, "train.beta", t.beta);
    if (const auto pre = tree.get_optional<std::string>("train.preprocessing")) {
        checked("train.preprocessing", [&] { t.preprocessing = policy::preprocessing_from_string(*pre); });
    }
    if (const auto opt = tree.get_optional<std::string>("train.optimizer")) {
        checked("train.optimizer", [&] { t.optimizer = rl::optimizer_from_string(*opt); });
    }
    if (const auto rs = tree.get_optional<std::string>("train.return_scaling")) {
        checked("train.return_scaling", [&] { t.return_scaling = rl::return_scaling_from_string(*rs); });
    }

    apply_seed(cfg, seed);
    checked("search", [&] { cfg.search.validate(); });
    checked("train", [&] { cfg.train.validate(); });
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string());
    }
    return parse_run_config(in);
}

} // namespace eqas::config
