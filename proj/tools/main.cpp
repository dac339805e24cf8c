#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

#include "lienorm/cli.hpp"
#include "lienorm/errors.hpp"

using namespace lienorm;

namespace {

std::vector<Method> parse_methods(const std::string& s) {
    if (s == "explicit") return {Method::Explicit};
    if (s == "deprit") return {Method::Deprit};
    if (s == "henrard") return {Method::Henrard};
    if (s == "all") return {Method::Explicit, Method::Deprit, Method::Henrard};
    throw UsageError("unknown method '" + s + "'");
}

std::set<OutputKind> parse_outputs(const std::vector<std::string>& items) {
    std::set<OutputKind> out;
    for (const auto& item : items) {
        std::size_t start = 0;
        while (start <= item.size()) {
            std::size_t comma = item.find(',', start);
            std::string tok = item.substr(start, comma == std::string::npos ? std::string::npos
                                                                            : comma - start);
            if (!tok.empty()) {
                if (tok == "generator") out.insert(OutputKind::Generator);
                else if (tok == "normalized") out.insert(OutputKind::Normalized);
                else if (tok == "hori") out.insert(OutputKind::Hori);
                else if (tok == "gustavson") out.insert(OutputKind::Gustavson);
                else throw UsageError("unknown output '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normalization of perturbed polynomial Hamiltonians"};
    app.require_subcommand(0, 1);

    std::string model = "pendulum", method = "explicit", frame = "pq", format = "text";
    std::vector<std::string> outputs;
    int order = 4, hori_power = 0;
    bool bench = false;
    app.add_option("--model", model, "builtin model name (pendulum, henon_heiles, toda2d) or a model file path");
    app.add_option("--order", order, "truncation order N");
    app.add_option("--method", method, "explicit | deprit | henrard | all");
    app.add_option("--frame", frame, "output frame: pq | birkhoff");
    app.add_option("--out", outputs, "outputs: generator,normalized,hori,gustavson")
        ->delimiter(',');
    app.add_option("--format", format, "text | json | csv");
    app.add_flag("--bench", bench, "append benchmark CSV rows (orders 2..N per method)");
    app.add_option("--hori-power", hori_power, "leading eps power s of the Hori integral");

    auto* words = app.add_subcommand("words", "dump the operator-word expansion of a perturbed operator");
    std::string kind = "S";
    int worder = 1;
    words->add_option("--kind", kind, "P | S | D")->required();
    words->add_option("--order", worder, "eps order n")->required();

    try {
        app.parse(argc, argv);
        if (words->parsed()) {
            KatoKind k;
            if (kind == "P") k = KatoKind::P;
            else if (kind == "S") k = KatoKind::S;
            else if (kind == "D") k = KatoKind::D;
            else throw UsageError("unknown kind '" + kind + "'");
            std::cout << words_dump(k, worder);
            return 0;
        }
        RunConfig config;
        config.model = model;
        config.order = order;
        config.methods = parse_methods(method);
        if (frame == "pq") config.frame = VarKind::pq;
        else if (frame == "birkhoff") config.frame = VarKind::birkhoff;
        else throw UsageError("unknown frame '" + frame + "'");
        if (!outputs.empty()) config.outputs = parse_outputs(outputs);
        if (format == "text") config.format = Format::Text;
        else if (format == "json") config.format = Format::Json;
        else if (format == "csv") config.format = Format::Csv;
        else throw UsageError("unknown format '" + format + "'");
        config.bench = bench;
        config.hori_power = hori_power;
        std::cout << run(config);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
}
