#include "jsonio.hpp"

#include "json.hpp"

namespace reprlab {

using nlohmann::json;

std::string sample_json(const Partition& lambda, uint64_t seed) {
    json j;
    j["kind"] = "plancherel";
    j["n"] = lambda.size();
    j["seed"] = seed;
    j["partition"] = lambda.parts();
    return j.dump(2);
}

std::string sample_json(const StrictPartition& lambda, uint64_t seed) {
    json j;
    j["kind"] = "strict";
    j["n"] = lambda.size();
    j["seed"] = seed;
    j["partition"] = lambda.parts();
    return j.dump(2);
}

std::string sample_json(const SetPartition& pi, int q, uint64_t seed) {
    json j;
    j["kind"] = "superplancherel";
    j["n"] = pi.n();
    j["q"] = q;
    j["seed"] = seed;
    j["set_partition"] = pi.to_string();
    j["blocks"] = pi.blocks();
    ArcStatistics st = arc_statistics(pi);
    j["stats"] = {{"d", st.d}, {"dim", st.dim}, {"crs", st.crs}, {"nst", st.nst}};
    return j.dump(2);
}

namespace {

json statistic_json(const Statistic& s) {
    return json{{"name", s.name},     {"mean", s.mean},           {"variance", s.variance},
                {"target", s.target}, {"z", s.zscore},            {"threshold", s.threshold},
                {"pass", s.pass}};
}

} // namespace

std::string report_json(const StatReport& rep) {
    json j;
    j["report"] = rep.kind;
    j["seed"] = rep.seed;
    j["n"] = rep.n;
    j["trials"] = rep.trials;
    if (rep.q) j["q"] = rep.q;
    j["statistics"] = json::array();
    for (const auto& s : rep.stats) j["statistics"].push_back(statistic_json(s));
    j["pass"] = rep.pass;
    return j.dump(2);
}

std::string report_csv(const StatReport& rep) {
    std::string out = "name,mean,variance,target,z,threshold,pass\n";
    for (const auto& s : rep.stats) {
        out += s.name + "," + std::to_string(s.mean) + "," + std::to_string(s.variance) + "," +
               std::to_string(s.target) + "," + std::to_string(s.zscore) + "," +
               std::to_string(s.threshold) + "," + (s.pass ? "true" : "false") + "\n";
    }
    return out;
}

Partition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<int> parts = j.at("partition").get<std::vector<int>>();
    return Partition(std::move(parts));
}

StrictPartition strict_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<int> parts = j.at("partition").get<std::vector<int>>();
    return StrictPartition(std::move(parts));
}

SetPartition setpartition_from_json(const std::string& text) {
    json j = json::parse(text);
    return SetPartition::parse(j.at("set_partition").get<std::string>());
}

} // namespace reprlab
