#include "bga/record_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bga {

namespace {

using nlohmann::json;

json config_to_json(const GAConfig& c) {
    return json{{"n", c.n},
                {"population_size", c.population_size},
                {"eval_budget", c.eval_budget},
                {"tournament_size", c.tournament_size},
                {"mutation_probability", c.mutation_probability},
                {"crossover", std::string(crossover_key(c.crossover))},
                {"local_search", std::string(policy_key(c.policy))},
                {"eval_counting", std::string(eval_counting_key(c.eval_counting))},
                {"seed", c.seed}};
}

GAConfig config_from_json(const json& j) {
    GAConfig c;
    c.n = j.at("n").get<int>();
    c.population_size = j.at("population_size").get<std::size_t>();
    c.eval_budget = j.at("eval_budget").get<std::uint64_t>();
    c.tournament_size = j.at("tournament_size").get<std::size_t>();
    c.mutation_probability = j.at("mutation_probability").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    const auto cx = parse_crossover(j.at("crossover").get<std::string>());
    const auto ls = parse_policy(j.at("local_search").get<std::string>());
    const auto ec = parse_eval_counting(j.at("eval_counting").get<std::string>());
    if (!cx || !ls || !ec)
        throw std::invalid_argument("run record: unknown operator key");
    c.crossover = *cx;
    c.policy = *ls;
    c.eval_counting = *ec;
    return c;
}

}  // namespace

std::string run_record_to_json(const RunRecord& record) {
    json j;
    j["config"] = config_to_json(record.config);
    j["seed"] = record.config.seed;
    j["rng"] = record.rng_name;
    j["best_fitness"] = record.best_fitness;
    j["evals_to_best"] = record.evals_to_best;
    j["best_table_hex"] = to_hex(record.best_table);
    auto timeline = json::array();
    for (const auto& p : record.timeline)
        timeline.push_back(json::array({p.evals, p.fitness}));
    j["timeline"] = std::move(timeline);
    auto pop = json::array();
    for (const auto& t : record.final_population) pop.push_back(to_hex(t));
    j["final_population_hex"] = std::move(pop);
    return j.dump(2) + "\n";
}

RunRecord run_record_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunRecord record;
    record.config = config_from_json(j.at("config"));
    record.rng_name = j.at("rng").get<std::string>();
    record.best_fitness = j.at("best_fitness").get<int>();
    record.evals_to_best = j.at("evals_to_best").get<std::uint64_t>();
    record.best_table = table_from_hex(record.config.n, j.at("best_table_hex").get<std::string>());
    for (const auto& p : j.at("timeline"))
        record.timeline.push_back({p.at(0).get<std::uint64_t>(), p.at(1).get<int>()});
    for (const auto& h : j.at("final_population_hex"))
        record.final_population.push_back(table_from_hex(record.config.n, h.get<std::string>()));
    return record;
}

void write_run_record(const std::filesystem::path& path, const RunRecord& record) {
    // write to a side file first so an interrupted run never leaves a
    // plausible-looking partial record
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << run_record_to_json(record);
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

RunRecord read_run_record(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return run_record_from_json(text);
}

}  // namespace bga
