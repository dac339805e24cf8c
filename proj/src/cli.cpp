#include "lienorm/cli.hpp"

#include <json.hpp>

#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include "lienorm/canonical.hpp"
#include "lienorm/errors.hpp"
#include "lienorm/integrals.hpp"
#include "lienorm/models.hpp"
#include "lienorm/normalize.hpp"

namespace lienorm {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// True when any standalone letter run spells a Birkhoff variable.
bool mentions_birkhoff_vars(const std::string& s) {
    for (std::size_t i = 0; i < s.size();) {
        if (!std::isalpha(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
        std::string word = s.substr(i, j - i);
        if (word == "zeta" || word == "eta") return true;
        i = j;
    }
    return false;
}

mpq_class parse_omega_entry(const std::string& tok, const std::string& where) {
    std::string t = tok;
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    if (t.empty() || t.find_first_not_of("0123456789/") != std::string::npos ||
        t.front() == '/' || t.back() == '/' || t.find("//") != std::string::npos)
        throw ParseError(where + ": bad frequency '" + tok + "'", 0);
    mpq_class q(t);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

} // namespace

HamiltonianModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open model file", 0);
    std::string line;
    int lineno = 0;
    int dim = 0;
    std::vector<mpq_class> omega;
    std::vector<std::pair<int, std::string>> hlines;
    std::vector<int> hlineno;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = path + ":" + std::to_string(lineno);
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(where + ": expected 'key: value'", 0);
        std::string key = strip(line.substr(0, colon));
        std::string val = strip(line.substr(colon + 1));
        if (key == "dim") {
            if (dim != 0) throw ParseError(where + ": duplicate dim", 0);
            try {
                dim = std::stoi(val);
            } catch (...) {
                throw ParseError(where + ": bad dimension '" + val + "'", 0);
            }
            if (dim < 1) throw ParseError(where + ": dimension must be >= 1", 0);
        } else if (key == "omega") {
            if (!omega.empty()) throw ParseError(where + ": duplicate omega", 0);
            std::istringstream toks(val);
            std::string tok;
            while (toks >> tok) omega.push_back(parse_omega_entry(tok, where));
            if (dim == 0) throw ParseError(where + ": dim must come before omega", 0);
            if (static_cast<int>(omega.size()) != dim)
                throw ParseError(where + ": expected " + std::to_string(dim) + " frequencies", 0);
        } else if (key.size() > 1 && key[0] == 'H' &&
                   key.find_first_not_of("0123456789", 1) == std::string::npos) {
            int k = std::stoi(key.substr(1));
            if (k < 1) throw ParseError(where + ": H index must be >= 1", 0);
            for (const auto& [k0, b0] : hlines) {
                (void)b0;
                if (k0 == k) throw ParseError(where + ": duplicate H" + std::to_string(k), 0);
            }
            if (dim == 0) throw ParseError(where + ": dim must come before H terms", 0);
            hlines.emplace_back(k, val);
            hlineno.push_back(lineno);
        } else {
            throw ParseError(where + ": unknown key '" + key + "'", 0);
        }
    }
    if (dim == 0) throw ParseError(path + ": missing dim", 0);
    if (omega.empty()) throw ParseError(path + ": missing omega", 0);

    bool birkhoff = false;
    for (const auto& [k, body] : hlines) {
        (void)k;
        if (mentions_birkhoff_vars(body)) birkhoff = true;
    }
    int maxk = 0;
    for (const auto& [k, body] : hlines) {
        (void)body;
        maxk = std::max(maxk, k);
    }
    std::vector<PolySeries> terms(
        maxk, PolySeries(birkhoff ? VarKind::birkhoff : VarKind::pq, dim));
    for (std::size_t i = 0; i < hlines.size(); ++i) {
        const auto& [k, body] = hlines[i];
        try {
            terms[k - 1] =
                PolySeries::parse(body, birkhoff ? VarKind::birkhoff : VarKind::pq, dim);
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(hlineno[i]) + ":" +
                                 std::to_string(e.offset() + 1) + ": " + e.what(),
                             e.offset());
        }
    }
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    try {
        return HamiltonianModel::make(name, dim, Frequencies(std::move(omega)), std::move(terms),
                                      maxk);
    } catch (const UsageError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

HamiltonianModel load_model(const RunConfig& config) {
    if (config.model == "pendulum") return pendulum(config.order);
    if (config.model == "henon_heiles") return henon_heiles();
    if (config.model == "toda2d") return toda2d(config.order);
    return parse_model_file(config.model);
}

const char* method_name(Method m) {
    switch (m) {
    case Method::Explicit: return "explicit";
    case Method::Deprit: return "deprit";
    case Method::Henrard: return "henrard";
    }
    return "?";
}

namespace {

struct MethodData {
    Method method;
    GeneratorSeries gen; // direct generator, or the inverse one for Henrard
    PolySeries normalized;

    MethodData(Method m, const HamiltonianModel& model, int N)
        : method(m), normalized(VarKind::birkhoff, model.dim) {
        switch (m) {
        case Method::Explicit:
            gen = explicit_generator(model, N);
            normalized = direct_transform(gen, model, N);
            break;
        case Method::Deprit: {
            auto r = deprit_classical(model, N);
            gen = std::move(r.generator);
            normalized = std::move(r.normalized);
            break;
        }
        case Method::Henrard: {
            auto r = henrard_normalize(model, N);
            gen = std::move(r.generator);
            normalized = std::move(r.normalized);
            break;
        }
        }
    }

    // Image of f under the inverse of the normalizing transform.
    PolySeries inverse_image(const PolySeries& f, int N) const {
        if (method == Method::Henrard) return direct_transform_fn(gen, f, N);
        return henrard_inverse(gen, f, N);
    }
};

PolySeries in_frame(const PolySeries& s, VarKind frame) {
    if (s.kind() == frame) return s;
    return frame == VarKind::pq ? from_birkhoff(s) : to_birkhoff(s);
}

int max_eps_pow(const PolySeries& s) {
    int m = 0;
    for (const auto& [mono, c] : s.terms()) {
        (void)c;
        m = std::max(m, static_cast<int>(mono.eps_pow));
    }
    return m;
}

void render_series_text(std::ostream& out, const PolySeries& series_birkhoff, VarKind frame) {
    PolySeries s = in_frame(series_birkhoff, frame);
    if (s.is_zero()) {
        out << "  0\n";
        return;
    }
    for (int n = 0; n <= max_eps_pow(s); ++n) {
        PolySeries block = s.eps_coeff(n);
        if (block.is_zero()) continue;
        out << "  eps^" << n << ": " << block.str() << "\n";
    }
}

nlohmann::ordered_json series_json(const PolySeries& series_birkhoff, VarKind frame) {
    PolySeries s = in_frame(series_birkhoff, frame);
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (int n = 0; n <= max_eps_pow(s); ++n) {
        PolySeries block = s.eps_coeff(n);
        if (block.is_zero()) continue;
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [m, c] : block.terms())
            terms.push_back({{"mono", m.str(s.kind())}, {"coeff", c.str()}});
        blocks.push_back({{"eps", n}, {"terms", std::move(terms)}});
    }
    return blocks;
}

std::string beta_str(const std::vector<mpz_class>& beta) {
    std::string out = "[";
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) out += ", ";
        out += beta[i].get_str();
    }
    return out + "]";
}

} // namespace

std::vector<BenchRow> run_bench(const RunConfig& config) {
    std::vector<BenchRow> rows;
    for (int order = std::min(2, config.order); order <= config.order; ++order) {
        RunConfig c = config;
        c.order = order;
        HamiltonianModel model = load_model(c);
        for (Method m : config.methods) {
            NormStats stats;
            auto t0 = std::chrono::steady_clock::now();
            switch (m) {
            case Method::Explicit: {
                GeneratorSeries g = explicit_generator(model, order, &stats);
                direct_transform(g, model, order, &stats);
                break;
            }
            case Method::Deprit: deprit_classical(model, order, &stats); break;
            case Method::Henrard: henrard_normalize(model, order, &stats); break;
            }
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
            rows.push_back({model.name, method_name(m), order, secs, stats.max_terms});
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "model,method,order,seconds,max_terms\n";
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
        out << r.model << "," << r.method << "," << r.order << "," << buf << "," << r.max_terms
            << "\n";
    }
    return out.str();
}

std::string run(const RunConfig& config) {
    if (config.order < 1) throw UsageError("run: order must be >= 1");
    if (config.methods.empty()) throw UsageError("run: no method selected");
    if (config.outputs.empty() && !config.bench)
        throw UsageError("run: nothing to do (no outputs and no bench)");
    if (config.format == Format::Csv && !config.bench)
        throw UsageError("run: csv format is only produced by --bench");

    HamiltonianModel model = load_model(config);
    const int N = config.order;
    const int s = config.hori_power > 0 ? config.hori_power : model.hori_power;

    std::ostringstream text;
    nlohmann::ordered_json j;
    if (config.format == Format::Text) {
        text << "model: " << model.name << "\norder: " << N << "\nframe: "
             << (config.frame == VarKind::pq ? "pq" : "birkhoff") << "\n";
    } else if (config.format == Format::Json) {
        j["model"] = model.name;
        j["order"] = N;
        j["frame"] = config.frame == VarKind::pq ? "pq" : "birkhoff";
        j["results"] = nlohmann::ordered_json::array();
    }

    if (!config.outputs.empty()) {
        CenterBasis center = center_generators(model.omega, model.dim);
        for (Method m : config.methods) {
            MethodData data(m, model, N);
            nlohmann::ordered_json jr;
            jr["method"] = method_name(m);
            if (config.format == Format::Text) text << "\nmethod: " << method_name(m) << "\n";
            if (config.outputs.count(OutputKind::Generator)) {
                PolySeries g = data.gen.combined(N - 1);
                if (config.format == Format::Text) {
                    text << (m == Method::Henrard ? "generator (inverse transform):\n"
                                                  : "generator:\n");
                    render_series_text(text, g, config.frame);
                } else {
                    jr["generator"] = series_json(g, config.frame);
                }
            }
            if (config.outputs.count(OutputKind::Normalized)) {
                if (config.format == Format::Text) {
                    text << "normalized:\n";
                    render_series_text(text, data.normalized, config.frame);
                } else {
                    jr["normalized"] = series_json(data.normalized, config.frame);
                }
            }
            if (config.outputs.count(OutputKind::Hori)) {
                PolySeries hori = hori_from_image(model, data.inverse_image(model.h0(), N), N, s);
                if (config.format == Format::Text) {
                    text << "hori (s=" << s << "):\n";
                    render_series_text(text, hori, config.frame);
                } else {
                    jr["hori"] = {{"s", s}, {"series", series_json(hori, config.frame)}};
                }
            }
            if (config.outputs.count(OutputKind::Gustavson)) {
                nlohmann::ordered_json jg = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < center.betas.size(); ++i) {
                    PolySeries seed = center_element(center.betas[i], model.dim);
                    PolySeries integral = data.inverse_image(seed, N);
                    if (config.format == Format::Text) {
                        text << "gustavson[" << (i + 1) << "] (beta: " << beta_str(center.betas[i])
                             << "):\n";
                        render_series_text(text, integral, config.frame);
                    } else {
                        nlohmann::ordered_json jb;
                        jb["beta"] = nlohmann::ordered_json::array();
                        for (const auto& b : center.betas[i]) jb["beta"].push_back(b.get_str());
                        jb["series"] = series_json(integral, config.frame);
                        jg.push_back(std::move(jb));
                    }
                }
                if (config.format == Format::Json) jr["gustavson"] = std::move(jg);
            }
            if (config.format == Format::Json) j["results"].push_back(std::move(jr));
        }
    }

    std::vector<BenchRow> rows;
    if (config.bench) rows = run_bench(config);

    switch (config.format) {
    case Format::Csv: return bench_csv(rows);
    case Format::Json:
        if (config.bench) {
            j["bench"] = nlohmann::ordered_json::array();
            for (const auto& r : rows)
                j["bench"].push_back({{"model", r.model},
                                      {"method", r.method},
                                      {"order", r.order},
                                      {"seconds", r.seconds},
                                      {"max_terms", r.max_terms}});
        }
        return j.dump(2) + "\n";
    case Format::Text:
    default:
        if (config.bench) text << "\n" << bench_csv(rows);
        return text.str();
    }
}

std::string words_dump(KatoKind kind, int n) {
    std::string out;
    for (const auto& w : kato_words(kind, n)) out += w.str() + "\n";
    return out;
}

} // namespace lienorm
