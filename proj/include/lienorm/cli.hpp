#pragma once

#include <set>
#include <string>
#include <vector>

#include "lienorm/kato.hpp"
#include "lienorm/model.hpp"

namespace lienorm {

enum class Method { Explicit, Deprit, Henrard };
enum class OutputKind { Generator, Normalized, Hori, Gustavson };
enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string model = "pendulum"; // builtin name or model file path
    int order = 4;
    std::vector<Method> methods = {Method::Explicit};
    VarKind frame = VarKind::pq;
    std::set<OutputKind> outputs = {OutputKind::Normalized};
    Format format = Format::Text;
    bool bench = false;
    int hori_power = 0; // 0 = use the model default
};

// Line-oriented model files: '#' comments, "dim:", "omega:", "H<k>:" entries.
// Throws ParseError with "path:line:col" context.
HamiltonianModel parse_model_file(const std::string& path);

// Builtin by name (pendulum, henon_heiles, toda2d) at the configured order,
// otherwise a model file.
HamiltonianModel load_model(const RunConfig& config);

struct BenchRow {
    std::string model;
    std::string method;
    int order = 0;
    double seconds = 0;
    std::size_t max_terms = 0;
};

std::vector<BenchRow> run_bench(const RunConfig& config);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Full deterministic report for the configuration (bench rows excluded from
// the determinism guarantee).
std::string run(const RunConfig& config);

// Word-list dump for the CLI subcommand, one word per line.
std::string words_dump(KatoKind kind, int n);

const char* method_name(Method m);

} // namespace lienorm
