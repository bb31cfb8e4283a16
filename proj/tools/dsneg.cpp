#include <cstdio>
#include <iostream>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsneg/errors.hpp"
#include "dsneg/io.hpp"
#include "dsneg/measures.hpp"
#include "dsneg/negation.hpp"

namespace {

using namespace dsneg;
using nlohmann::json;

// Flag combinations and limits that only surface after parsing; exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string human(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", x);
    return buffer;
}

std::string machine(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

std::string tuple_of(const ProbabilityDistribution& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += human(p[i]);
    }
    return out + ")";
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

// Left-aligned columns, two spaces between them, last column unpadded.
void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) {
                line.append(widths[i] - row[i].size() + 2, ' ');
            }
        }
        std::cout << line << "\n";
    }
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

void print_csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += csv_field(fields[i]);
    }
    std::cout << line << "\n";
}

BeliefStructure expect_structure(Document&& doc, const std::string& command) {
    if (!std::holds_alternative<BeliefStructure>(doc)) {
        throw ValidationError("the " + command + " command needs a \"masses\" document");
    }
    return std::get<BeliefStructure>(std::move(doc));
}

// Read a distribution as a Bayesian structure: each positive probability
// becomes the mass of its singleton.
BeliefStructure as_bayesian(const ProbabilityDistribution& p) {
    std::vector<std::pair<FocalSet, double>> entries;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > 0.0) {
            entries.emplace_back(p.frame().singleton(i), p[i]);
        }
    }
    return BeliefStructure(p.frame(), entries);
}

int run_negate(const std::string& input, bool json_mode) {
    BeliefStructure m = expect_structure(load_document(input), "negate");
    BeliefStructure negated = negate(m);
    if (json_mode) {
        print_json(to_json(negated));
        return 0;
    }
    std::cout << "frame: " << to_string(negated.frame().full_set()) << "\n";
    for (const auto& [set, mass] : negated.entries()) {
        std::cout << "m(" << set << ") = " << human(mass) << "\n";
    }
    return 0;
}

int run_iterate(const std::string& input, std::size_t steps, bool json_mode,
                bool csv_mode) {
    if (json_mode && csv_mode) {
        throw UsageError("choose one of --json or --csv");
    }
    BeliefStructure m = expect_structure(load_document(input), "iterate");
    NegationTrace trace = iterate_negation(m, steps);

    if (json_mode) {
        json step_docs = json::array();
        for (const auto& step : trace.steps) {
            step_docs.push_back(to_json(step));
        }
        print_json({{"steps", std::move(step_docs)},
                    {"terminal", to_string(trace.terminal)},
                    {"terminal_index", trace.terminal_index}});
        return 0;
    }

    // one column per subset that ever carries mass, in frame-mask order
    std::set<std::uint64_t> support;
    for (const auto& step : trace.steps) {
        for (const auto& [bits, mass] : step.mass_map()) {
            support.insert(bits);
        }
    }

    const Frame& frame = m.frame();
    std::vector<std::string> header{"step"};
    for (std::uint64_t bits : support) {
        const std::string name = to_string(frame.subset(bits));
        header.push_back(csv_mode ? name : "m(" + name + ")");
    }
    header.push_back("nonspecificity");
    header.push_back("ambiguity_measure");

    std::vector<std::vector<std::string>> rows{std::move(header)};
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const BeliefStructure& step = trace.steps[k];
        std::vector<std::string> row{std::to_string(k)};
        for (std::uint64_t bits : support) {
            const double mass = step.mass_bits(bits);
            row.push_back(csv_mode ? machine(mass) : human(mass));
        }
        const double n = nonspecificity(step);
        const double am = ambiguity_measure(step);
        row.push_back(csv_mode ? machine(n) : human(n));
        row.push_back(csv_mode ? machine(am) : human(am));
        rows.push_back(std::move(row));
    }

    const std::string annotation = "terminal: " + std::string(to_string(trace.terminal)) +
                                   " at step " + std::to_string(trace.terminal_index);
    if (csv_mode) {
        for (const auto& row : rows) {
            print_csv_row(row);
        }
        std::cerr << annotation << "\n";  // keep stdout pure CSV
    } else {
        print_table(rows);
        std::cout << annotation << "\n";
    }
    return 0;
}

int run_measures(const std::string& input, bool json_mode, bool all_subsets) {
    BeliefStructure m = expect_structure(load_document(input), "measures");
    const Frame& frame = m.frame();
    if (all_subsets && frame.size() > 10) {
        throw UsageError("--all-subsets is limited to frames with at most 10 states");
    }

    std::vector<FocalSet> sets;
    if (all_subsets) {
        for (std::uint64_t bits = 0; bits <= frame.full_mask(); ++bits) {
            sets.push_back(frame.subset(bits));
        }
    } else {
        for (const auto& [set, mass] : m.entries()) {
            sets.push_back(set);
        }
    }

    const double n = nonspecificity(m);
    const double am = ambiguity_measure(m);
    ProbabilityDistribution betp = pignistic(m);

    if (json_mode) {
        json rows = json::array();
        for (const auto& set : sets) {
            rows.push_back({{"set", set.member_labels()},
                            {"mass", round_for_output(m.mass(set))},
                            {"bel", round_for_output(bel(m, set))},
                            {"pl", round_for_output(pl(m, set))}});
        }
        json betp_values = json::array();
        for (double x : betp.probs()) {
            betp_values.push_back(round_for_output(x));
        }
        print_json({{"frame", frame.labels()},
                    {"rows", std::move(rows)},
                    {"nonspecificity", round_for_output(n)},
                    {"ambiguity_measure", round_for_output(am)},
                    {"pignistic", std::move(betp_values)}});
        return 0;
    }

    std::cout << "frame: " << to_string(frame.full_set()) << "\n";
    std::vector<std::vector<std::string>> rows{{"set", "mass", "bel", "pl"}};
    for (const auto& set : sets) {
        rows.push_back({to_string(set), human(m.mass(set)), human(bel(m, set)),
                        human(pl(m, set))});
    }
    print_table(rows);
    std::cout << "nonspecificity    = " << human(n) << "\n";
    std::cout << "ambiguity_measure = " << human(am) << "\n";
    std::cout << "pignistic: " << tuple_of(betp) << "\n";
    return 0;
}

int run_yager(const std::string& input, bool json_mode, bool via_belief) {
    Document doc = load_document(input);

    if (via_belief) {
        BeliefStructure m = std::holds_alternative<BeliefStructure>(doc)
                                ? std::get<BeliefStructure>(std::move(doc))
                                : as_bayesian(std::get<ProbabilityDistribution>(doc));
        ProbabilityDistribution result = bayesian_negation_reduced(m);
        BeliefStructure intermediate = negate(m);
        if (json_mode) {
            print_json({{"intermediate", to_json(intermediate)},
                        {"result", to_json(result)}});
            return 0;
        }
        std::cout << "input:   " << tuple_of(distribution_of(m)) << "\n";
        std::cout << "intermediate:\n";
        for (const auto& [set, mass] : intermediate.entries()) {
            std::cout << "  m(" << set << ") = " << human(mass) << "\n";
        }
        std::cout << "negated: " << tuple_of(result) << "\n";
        return 0;
    }

    if (!std::holds_alternative<ProbabilityDistribution>(doc)) {
        throw ValidationError("the yager command needs a \"probs\" document");
    }
    const auto& p = std::get<ProbabilityDistribution>(doc);
    ProbabilityDistribution negated = yager_negation(p);
    if (json_mode) {
        print_json(to_json(negated));
        return 0;
    }
    std::cout << "input:   " << tuple_of(p) << "\n";
    std::cout << "negated: " << tuple_of(negated) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negation transforms and uncertainty measures for belief structures"};
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit machine-readable JSON");

    std::string input;
    const std::string input_help = "input document (JSON file path, or - for stdin)";

    CLI::App* negate_cmd = app.add_subcommand("negate", "negate a belief structure");
    negate_cmd->fallthrough();
    negate_cmd->add_option("input", input, input_help)->required();

    std::size_t steps = 0;
    bool csv_mode = false;
    CLI::App* iterate_cmd =
        app.add_subcommand("iterate", "negate repeatedly and trace the measures");
    iterate_cmd->fallthrough();
    iterate_cmd->add_option("input", input, input_help)->required();
    iterate_cmd->add_option("--steps", steps, "number of negation steps")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    iterate_cmd->add_flag("--csv", csv_mode, "emit the trace as CSV");

    bool all_subsets = false;
    CLI::App* measures_cmd =
        app.add_subcommand("measures", "belief intervals and uncertainty measures");
    measures_cmd->fallthrough();
    measures_cmd->add_option("input", input, input_help)->required();
    measures_cmd->add_flag("--all-subsets", all_subsets,
                           "tabulate every subset, not just focal elements");

    bool via_belief = false;
    CLI::App* yager_cmd =
        app.add_subcommand("yager", "negate a probability distribution");
    yager_cmd->fallthrough();
    yager_cmd->add_option("input", input, input_help)->required();
    yager_cmd->add_flag("--via-belief", via_belief,
                        "run the negation through the belief-structure reduction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*negate_cmd) {
            return run_negate(input, json_mode);
        }
        if (*iterate_cmd) {
            return run_iterate(input, steps, json_mode, csv_mode);
        }
        if (*measures_cmd) {
            return run_measures(input, json_mode, all_subsets);
        }
        return run_yager(input, json_mode, via_belief);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
