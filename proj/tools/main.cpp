#include "cli.hpp"

#include "codepth/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace codepth;
using namespace codepth::cli;

namespace {

void add_class_options(CLI::App* app, ClassArgs& a) {
    app->add_option("--class", a.cls, "C, S, T, B, G, H or a full name such as H(2,1)")->required();
    app->add_option("--c", a.c, "codepth of C(c)");
    app->add_option("--r", a.r, "parameter of G(r)");
    app->add_option("--p", a.p, "first parameter of H(p,q)");
    app->add_option("--q", a.q, "second parameter of H(p,q)");
    app->add_option("--l", a.l);
    app->add_option("--n", a.n);
    app->add_option("--e", a.e, "embedding dimension")->capture_default_str();
    app->add_option("--d", a.d, "depth")->capture_default_str();
    app->add_option("--h", a.h, "dim R - depth R; default: least admissible value");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"codepth: Bass and Poincare series of local rings of codepth at most 3"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    ClassArgs series_args, growth_args;
    std::optional<int> series_window, growth_window, classify_window;
    auto* series = app.add_subcommand("series", "class-row series f, g, Bass and Poincare");
    add_class_options(series, series_args);
    series->add_option("--window", series_window, "last Taylor coefficient");
    series->add_flag("--force", series_args.force, "evaluate the closed forms on an inadmissible tuple");

    std::string file, corpus_name;
    auto* cls = app.add_subcommand("classify", "Koszul homology, class and sextuple of a presentation");
    cls->add_option("file", file, "presentation file (codepth.presentation/1)");
    cls->add_option("--corpus", corpus_name, "built-in example instead of a file");
    cls->add_option("--window", classify_window, "internal degree window D");

    std::string formula;
    bool all = false;
    int degree = 8;
    std::uint32_t field = 0;
    std::string fixture;
    auto* verify = app.add_subcommand("verify", "closed forms against the resolution oracle");
    verify->add_option("--formula", formula);
    verify->add_flag("--all", all);
    verify->add_option("--degree", degree)->capture_default_str();
    verify->add_option("--field", field, "0 for Q or an odd prime")->capture_default_str();
    verify->add_option("--fixture", fixture, "only fixtures whose name contains this");

    auto* growth = app.add_subcommand("growth", "growth verdict on the Bass numbers");
    add_class_options(growth, growth_args);
    growth->add_option("--window", growth_window, "N");

    auto* examples = app.add_subcommand("examples", "list the built-in corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    Json report;
    try {
        if (series->parsed()) {
            report = cmd_series(series_args, series_window ? *series_window : window_from_env(10));
        } else if (cls->parsed()) {
            RingPresentation R;
            std::string source;
            if (!corpus_name.empty() == !file.empty()) throw InvalidInput("give either a presentation file or --corpus");
            if (!corpus_name.empty()) {
                const auto* e = find_corpus(corpus_name);
                if (!e) throw InvalidInput("unknown corpus entry '" + corpus_name + "'");
                R = e->ring;
                source = "corpus:" + corpus_name;
            } else {
                R = load_presentation(file);
                source = file;
            }
            report = cmd_classify(R, source, classify_window ? *classify_window : window_from_env(-1));
        } else if (verify->parsed()) {
            std::vector<Formula> fs;
            if (all == !formula.empty()) throw InvalidInput("give either --formula or --all");
            if (all) {
                fs.assign(all_formulas.begin(), all_formulas.end());
            } else {
                auto f = parse_formula(formula);
                if (!f) throw InvalidInput("unknown formula '" + formula + "'");
                fs.push_back(*f);
            }
            report = cmd_verify(fs, field == 0 ? FieldSpec::rationals() : FieldSpec::prime(field), degree, fixture);
        } else if (growth->parsed()) {
            report = cmd_growth(growth_args, growth_window ? *growth_window : window_from_env(12));
        } else if (examples->parsed()) {
            report = cmd_examples();
        }
    } catch (const Error& e) {
        report = error_report(command, Json::object(), e.code(), e.kind() == ErrorKind::input ? "input" : "math", e.what());
    } catch (const std::bad_alloc&) {
        report = error_report(command, Json::object(), "OutOfMemory", "math", "out of memory; try a smaller window");
    }

    if (format == "table")
        std::cout << render_table(report);
    else
        std::cout << report.dump(2) << "\n";
    if (report.contains("error")) std::cerr << "codepth: " << report["error"]["message"].get<std::string>() << "\n";
    return exit_code(report);
}
