#include "obvp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "obvp/basis.hpp"
#include "obvp/errors.hpp"
#include "obvp/examples.hpp"
#include "obvp/exact.hpp"
#include "obvp/oracle.hpp"
#include "obvp/problem_file.hpp"
#include "obvp/verify.hpp"

namespace obvp::cli {

namespace {

constexpr double kPrintedTol = 1e-9;
constexpr std::size_t kReferenceGrid = 101;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Runs `body`, mapping library exceptions to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const RankDeficientError& e) {
        err << "error: " << e.what() << "\n";
        return kExitRank;
    } catch (const InconsistentSystemError& e) {
        err << "error: " << e.what() << "\n";
        return kExitRank;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

double reference_deviation(const examples::ExampleEntry& entry, const exact::PiecewiseSolution& sol) {
    const double a = entry.bvp.lower();
    const double b = entry.bvp.upper();
    double worst = 0.0;
    for (std::size_t i = 0; i < kReferenceGrid; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / (kReferenceGrid - 1);
        worst = std::max(worst, std::abs(exact::eval_solution(sol, entry.bvp, x, 0) - entry.reference(x)));
    }
    return worst;
}

// Returns false if a trusted constant misses its closed form.
bool print_printed_constants(const examples::ExampleEntry& entry, const exact::PiecewiseSolution& sol,
                           std::ostream& out) {
    if (entry.printed_constants.empty()) {
        return true;
    }
    out << (entry.constants_trusted ? "printed constants:\n" : "printed constants (informational):\n");
    out << "  " << std::left << std::setw(24) << "name" << std::setw(10) << "column" << std::setw(26)
        << "solver" << std::setw(26) << "printed" << "delta\n"
        << std::right;
    bool ok = true;
    for (const auto& pc : entry.printed_constants) {
        const auto& piece = sol.pieces.at(pc.column.piece);
        const double solver = piece.constants.at(pc.column.basis);
        const double delta = std::abs(solver - pc.value);
        std::ostringstream col;
        col << "(" << pc.column.piece << "," << pc.column.basis << ")";
        out << "  " << std::left << std::setw(24) << pc.name << std::setw(10) << col.str() << std::setw(26)
            << fmt(solver) << std::setw(26) << fmt(pc.value) << std::right << std::setprecision(3)
            << delta;
        if (delta > kPrintedTol) {
            out << (entry.constants_trusted ? "  MISMATCH" : "  differs");
            ok = ok && !entry.constants_trusted;
        }
        out << "\n";
    }
    return ok;
}

// For entries not enforcing every order, states what the full reading does.
void print_alternate_reading(const examples::ExampleEntry& entry, std::ostream& out) {
    const auto full = model::ContinuitySpec::all_orders(entry.bvp.order);
    if (entry.printed_continuity.enforced_orders == full.enforced_orders) {
        return;
    }
    auto alt = entry.bvp;
    alt.continuity = full;
    out << "alternate reading (all orders continuous): ";
    try {
        const auto sol = exact::solve_exact(alt);
        out << "solvable, rank " << sol.rank_report.rank << "\n";
    } catch (const InconsistentSystemError& e) {
        out << "inconsistent, least-squares residual " << std::setprecision(3) << e.residual_norm() << "\n";
    } catch (const RankDeficientError& e) {
        out << "rank deficient, nullity " << e.nullity() << "\n";
    }
}

int verify_and_print(const model::PiecewiseBvp& bvp, const exact::PiecewiseSolution& sol, bool with_oracle,
                     double h, std::ostream& out) {
    std::optional<oracle::NumericSolution> numeric;
    if (with_oracle) {
        numeric = oracle::shooting_solve(bvp, h);
    }
    const auto report = verify::build_report(sol, bvp, numeric ? &*numeric : nullptr);
    out << verify::to_table(report);
    return report.pass ? kExitOk : kExitVerify;
}

int reproduce_one(const std::string& id, bool with_oracle, std::ostream& out, std::ostream& err) {
    const auto& entry = examples::get_example(id);
    out << "== " << entry.id << ": " << entry.description << "\n";
    if (entry.flagged) {
        out << "!! inconsistency flag: the printed material for this example does not hold together\n";
    }
    for (const auto& note : entry.notes) {
        out << "   note: " << note << "\n";
    }

    const model::PiecewiseBvp* bvp = &entry.bvp;
    exact::PiecewiseSolution sol;
    try {
        sol = exact::solve_exact(entry.bvp);
    } catch (const InconsistentSystemError& e) {
        if (!entry.consistent_variant) {
            throw;
        }
        out << "printed problem: " << e.what() << "\n";
        out << "solving the consistent variant instead\n";
        bvp = &*entry.consistent_variant;
        sol = exact::solve_exact(*bvp);
    }
    out << exact::describe_constants(sol, *bvp);

    bool printed_ok = true;
    if (bvp == &entry.bvp) {
        printed_ok = print_printed_constants(entry, sol, out);
        if (entry.has_reference()) {
            const double dev = reference_deviation(entry, sol);
            out << "max |solver - printed closed form| on " << kReferenceGrid << " points: "
                << std::setprecision(3) << dev << "\n";
            if (dev > kPrintedTol) {
                printed_ok = false;
            }
        }
    }
    print_alternate_reading(entry, out);

    const bool oracle = with_oracle && !entry.oracle_excluded;
    if (with_oracle && entry.oracle_excluded) {
        out << "oracle comparison skipped for this entry\n";
    }
    const int code = verify_and_print(*bvp, sol, oracle, oracle::kDefaultStep, out);
    if (!printed_ok) {
        err << entry.id << ": solver disagrees with the printed closed form\n";
        return kExitVerify;
    }
    return code;
}

}  // namespace

int cmd_solve(const std::string& input_path, const std::string& output_path, int samples,
              std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (samples < 2) {
            throw InputError("samples must be at least 2");
        }
        const auto bvp = load_problem(input_path);
        const auto sol = exact::solve_exact(bvp);
        std::ofstream file(output_path);
        if (!file) {
            throw InputError("cannot write '" + output_path + "'");
        }
        file << "x,piece,u";
        for (int k = 1; k < bvp.order; ++k) {
            file << ",du" << k;
        }
        file << "\n";
        const double a = bvp.lower();
        const double b = bvp.upper();
        for (int i = 0; i < samples; ++i) {
            const double x = i + 1 == samples ? b : a + (b - a) * i / (samples - 1);
            const std::size_t piece = model::evaluation_piece(bvp, x);
            file << fmt(x) << "," << piece;
            for (int k = 0; k < bvp.order; ++k) {
                file << "," << fmt(exact::eval_piece(sol, piece, x, k));
            }
            file << "\n";
        }
        out << bvp.pieces.size() << " pieces\n" << exact::describe_constants(sol, bvp);
        return static_cast<int>(kExitOk);
    });
}

int cmd_reproduce(const std::string& example_id, bool with_oracle, std::ostream& out, std::ostream& err) {
    if (example_id != "all") {
        return guarded(err, [&] { return reproduce_one(example_id, with_oracle, out, err); });
    }
    int worst = kExitOk;
    for (const auto& summary : examples::list_examples()) {
        const int code = guarded(err, [&] { return reproduce_one(summary.id, with_oracle, out, err); });
        out << "-> " << summary.id << ": " << (code == kExitOk ? "pass" : "FAIL")
            << (summary.flagged ? " (flagged, not counted)" : "") << "\n\n";
        if (!summary.flagged) {
            worst = std::max(worst, code);
        }
    }
    return worst;
}

int cmd_verify(const std::string& input_path, double h, bool as_json, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!(h > 0.0)) {
            throw InputError("step must be positive");
        }
        const auto bvp = load_problem(input_path);
        const auto sol = exact::solve_exact(bvp);
        const auto numeric = oracle::shooting_solve(bvp, h);
        const auto report = verify::build_report(sol, bvp, &numeric);
        if (as_json) {
            out << verify::to_json(report).dump(2) << "\n";
        } else {
            out << verify::to_table(report);
        }
        return report.pass ? static_cast<int>(kExitOk) : static_cast<int>(kExitVerify);
    });
}

int cmd_list(std::ostream& out) {
    for (const auto& s : examples::list_examples()) {
        out << std::left << std::setw(8) << s.id << std::right << (s.has_reference ? " [ref]" : "      ")
            << (s.flagged ? " [flagged]" : "          ") << "  " << s.description << "\n";
    }
    return kExitOk;
}

int cmd_export(const std::string& example_id, const std::string& output_path, bool drop_pins,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto bvp = examples::get_example(example_id).bvp;
        if (drop_pins) {
            bvp.pins.clear();
        }
        if (output_path.empty() || output_path == "-") {
            out << export_problem(bvp);
        } else {
            save_problem(output_path, bvp);
        }
        return static_cast<int>(kExitOk);
    });
}

int run(int argc, char** argv) {
    CLI::App app{"Piecewise linear obstacle boundary-value problem solver"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string example;
    int samples = 201;
    double step = oracle::kDefaultStep;
    bool with_oracle = false;
    bool all = false;
    bool as_json = false;
    bool drop_pins = false;

    auto* solve = app.add_subcommand("solve", "solve a problem file and write a sampled table");
    solve->add_option("--input", input, "problem file")->required();
    solve->add_option("--output", output, "CSV output path")->required();
    solve->add_option("--samples", samples, "number of rows (>= 2)");

    auto* reproduce = app.add_subcommand("reproduce", "solve and report a built-in example");
    reproduce->add_option("--example", example, "example id (see list)");
    reproduce->add_flag("--oracle", with_oracle, "compare against the shooting oracle");
    reproduce->add_flag("--all", all, "every registry entry");

    auto* verify = app.add_subcommand("verify", "exact solve plus oracle and invariant report");
    verify->add_option("--input", input, "problem file")->required();
    verify->add_option("--step", step, "RK4 step");
    verify->add_flag("--json", as_json, "emit the report as JSON");

    auto* list = app.add_subcommand("list", "list built-in examples");

    auto* exp = app.add_subcommand("export", "write a built-in example as a problem file");
    exp->add_option("--example", example, "example id")->required();
    exp->add_option("--output", output, "output path (default stdout)");
    exp->add_flag("--drop-pins", drop_pins, "omit pinned constants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (*solve) {
        return cmd_solve(input, output, samples, std::cout, std::cerr);
    }
    if (*reproduce) {
        if (all) {
            return cmd_reproduce("all", with_oracle, std::cout, std::cerr);
        }
        if (example.empty()) {
            std::cerr << "error: reproduce needs --example ID or --all\n";
            return kExitInput;
        }
        return cmd_reproduce(example, with_oracle, std::cout, std::cerr);
    }
    if (*verify) {
        return cmd_verify(input, step, as_json, std::cout, std::cerr);
    }
    if (*list) {
        return cmd_list(std::cout);
    }
    return cmd_export(example, output, drop_pins, std::cout, std::cerr);
}

}  // namespace obvp::cli
