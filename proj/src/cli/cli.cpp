#include "npls/cli/cli.hpp"

#include "npls/cli/io.hpp"
#include "npls/extract/error.hpp"
#include "npls/extract/npls_compiler.hpp"
#include "npls/extract/pls_compiler.hpp"
#include "npls/extract/witness.hpp"
#include "npls/graph/family.hpp"
#include "npls/proof/generate.hpp"
#include "npls/search/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace npls::cli
{
    using Json = nlohmann::ordered_json;

    namespace
    {
        /// Semantic failure carrying its own message, mapped to exit code 1.
        struct Failure : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto path_json(const proof::NodePath & p) -> Json { return Json(p.entries); }

        class Session
        {
        public:
            Session(const RunConfig & cfg, std::ostream & out) :
                cfg_(cfg),
                out_(out)
            {
            }

            auto machine() const -> bool { return cfg_.output == OutputFormat::machine; }

            void record(const Json & j) { out_ << j.dump() << '\n'; }

            auto load() -> Document
            {
                if (cfg_.input_path.empty())
                    throw ParseError("an input file is required");
                return parse_document(read_file(resolve_input(cfg_.input_path)));
            }

            /// Derivations as given; templates expanded at --x.
            auto load_derivation() -> proof::Derivation
            {
                auto doc = load();
                if (auto * d = std::get_if<proof::Derivation>(&doc))
                    return *d;
                if (auto * t = std::get_if<proof::DerivationTemplate>(&doc))
                    return proof::expand_template(*t, cfg_.x_value);
                throw ParseError("expected a derivation or template file");
            }

            auto mode_for(const proof::Derivation & d) const -> proof::Mode
            {
                switch (cfg_.mode) {
                case ModeChoice::any: return proof::Mode::any;
                case ModeChoice::pls: return proof::Mode::pls;
                case ModeChoice::npls: return proof::Mode::npls;
                case ModeChoice::automatic: break;
                }
                return proof::validate(d, proof::Mode::pls).ok() ? proof::Mode::pls : proof::Mode::npls;
            }

            using Namer = std::function<std::string(search::PointId)>;
            using Encoder = std::function<Json(search::PointId)>;

            void print_trace(const search::SearchTrace & trace, const Namer & name, const Encoder & json)
            {
                print_trace(trace, name, json, name, json);
            }

            void print_trace(const search::SearchTrace & trace, const Namer & name, const Encoder & json,
                const Namer & source_name, const Encoder & source_json)
            {
                if (machine()) {
                    for (auto & s : trace.steps)
                        record(Json{{"record", "step"}, {"level", s.level}, {"source", source_json(s.source)},
                            {"target", json(s.target)}, {"rank", s.rank}, {"cost", s.cost},
                            {"action", search::to_string(s.action)}});
                    return;
                }
                out_ << std::left << std::setw(6) << "level" << std::setw(12) << "source" << std::setw(12) << "target"
                     << std::setw(6) << "rank" << std::setw(6) << "cost" << "action\n";
                for (auto & s : trace.steps)
                    out_ << std::setw(6) << s.level << std::setw(12) << source_name(s.source) << std::setw(12) << name(s.target)
                         << std::setw(6) << s.rank << std::setw(6) << s.cost << search::to_string(s.action) << '\n';
            }

            auto validate() -> ExitCode
            {
                auto d = load_derivation();
                auto mode = cfg_.mode == ModeChoice::automatic ? proof::Mode::any : mode_for(d);
                auto report = proof::validate(d, mode);
                if (machine()) {
                    for (auto & i : report.issues)
                        record(Json{{"record", "issue"}, {"path", path_json(i.path)}, {"message", i.message},
                            {"mode_violation", i.mode_violation}});
                    record(Json{{"record", "validation"}, {"mode", proof::to_string(mode)}, {"ok", report.ok()},
                        {"nodes", d.nodes.size()}});
                }
                else if (report.ok()) {
                    out_ << "valid (" << d.nodes.size() << " nodes, mode " << proof::to_string(mode) << ")\n";
                }
                else {
                    out_ << report.render();
                }
                return report.ok() ? ExitCode::ok : ExitCode::failure;
            }

            auto extract() -> ExitCode
            {
                auto d = load_derivation();
                auto ctx = extract::make_context(d, mode_for(d));
                auto report = ctx->mode() == proof::Mode::pls ? extract::extract_witness_pls(ctx, cfg_.max_steps)
                                                              : extract::extract_witness_npls(ctx, cfg_.max_steps);
                if (machine()) {
                    record(Json{{"record", "witness"}, {"mode", proof::to_string(ctx->mode())}, {"witness", report.witness},
                        {"verified", report.verified}, {"solution", path_json(report.solution_node)},
                        {"steps", report.trace.step_count()}});
                }
                else {
                    out_ << "witness=" << report.witness << " verified=" << (report.verified ? "true" : "false") << '\n';
                    out_ << "solution=" << proof::to_string(report.solution_node)
                         << " steps=" << report.trace.step_count() << " mode=" << proof::to_string(ctx->mode()) << '\n';
                }
                return report.verified ? ExitCode::ok : ExitCode::failure;
            }

            auto solve() -> ExitCode
            {
                auto doc = load();
                if (std::holds_alternative<proof::Derivation>(doc) || std::holds_alternative<proof::DerivationTemplate>(doc))
                    return solve_derivation();

                if (auto * g = std::get_if<graph::CostedDigraph>(&doc))
                    return solve_digraph(*g);

                auto family = std::get<graph::NestedGraphFamily>(doc);
                auto inst = graph::npls_from_family(family);
                auto layout = graph::layout_of(family);
                auto [y, trace] = search::solve_npls(inst, 0, cfg_.max_steps);
                auto name = [&](search::PointId p) {
                    return std::to_string(layout.problem_of(p)) + ":" + std::to_string(layout.node_of(p));
                };
                auto json = [&](search::PointId p) { return Json::array({layout.problem_of(p), layout.node_of(p)}); };
                auto problem = [](search::PointId p) { return std::to_string(p.bits); };
                auto problem_json = [](search::PointId p) { return Json(p.bits); };
                print_trace(trace, name, json, problem, problem_json);
                if (machine())
                    record(Json{{"record", "solution"}, {"target", json(y)}, {"steps", trace.step_count()}});
                else
                    out_ << "solution=" << name(y) << " steps=" << trace.step_count() << '\n';
                return ExitCode::ok;
            }

            auto solve_digraph(const graph::CostedDigraph & g) -> ExitCode
            {
                auto [y, trace] = search::solve_pls(digraph_pls(g), 0, cfg_.max_steps);
                auto name = [](search::PointId p) { return std::to_string(p.bits); };
                auto json = [](search::PointId p) { return Json(p.bits); };
                print_trace(trace, name, json);
                if (machine())
                    record(Json{{"record", "solution"}, {"target", json(y)}, {"steps", trace.step_count()}});
                else
                    out_ << "solution=" << name(y) << " steps=" << trace.step_count() << '\n';
                return ExitCode::ok;
            }

            auto solve_derivation() -> ExitCode
            {
                auto d = load_derivation();
                auto ctx = extract::make_context(d, mode_for(d));
                search::SearchTrace trace;
                search::PointId y;
                if (ctx->mode() == proof::Mode::pls)
                    std::tie(y, trace) = search::solve_pls(extract::build_pls(ctx), ctx->x(), cfg_.max_steps);
                else
                    std::tie(y, trace) = search::solve_npls(extract::build_npls(ctx), ctx->x(), cfg_.max_steps);
                auto name = [&](search::PointId p) { return proof::to_string(ctx->path_of(p)); };
                auto json = [&](search::PointId p) { return path_json(ctx->path_of(p)); };
                print_trace(trace, name, json);
                if (machine())
                    record(Json{{"record", "solution"}, {"target", json(y)}, {"steps", trace.step_count()}});
                else
                    out_ << "solution=" << name(y) << " steps=" << trace.step_count() << '\n';
                return ExitCode::ok;
            }

            auto verify() -> ExitCode
            {
                auto doc = load();
                search::NplsInstance inst;
                std::uint64_t x = 0;
                if (std::holds_alternative<proof::Derivation>(doc) || std::holds_alternative<proof::DerivationTemplate>(doc)) {
                    auto d = load_derivation();
                    auto ctx = extract::make_context(d, mode_for(d));
                    inst = ctx->mode() == proof::Mode::pls ? search::nested_from_pls(extract::build_pls(ctx))
                                                           : extract::build_npls(ctx);
                    x = ctx->x();
                }
                else if (auto * g = std::get_if<graph::CostedDigraph>(&doc)) {
                    inst = search::nested_from_pls(digraph_pls(*g));
                }
                else {
                    inst = graph::npls_from_family(std::get<graph::NestedGraphFamily>(doc), false);
                }
                auto report = search::verify_npls_conditions(inst, x);
                if (machine()) {
                    for (auto & r : report.results)
                        record(Json{{"record", "condition"}, {"name", search::to_string(r.condition)},
                            {"passed", r.passed}, {"counterexample", r.counterexample}, {"message", r.message}});
                }
                else {
                    out_ << report.render();
                }
                return report.all_passed() ? ExitCode::ok : ExitCode::failure;
            }

            auto gen_graph() -> ExitCode
            {
                auto family = graph::generate_family(cfg_.seed, cfg_.max_rank, cfg_.max_width);
                auto text = cfg_.max_rank == 0 ? digraph_to_json(family.problems.at(family.top).graph)
                                               : family_to_json(family);
                if (cfg_.output_path.empty())
                    out_ << text;
                else
                    write_file(cfg_.output_path, text);
                return ExitCode::ok;
            }

            auto bench() -> ExitCode
            {
                using Clock = std::chrono::steady_clock;
                auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
                bool all_ok = true;

                auto t0 = Clock::now();
                std::size_t verified = 0;
                for (std::uint64_t seed = cfg_.seed; seed < cfg_.seed + cfg_.count; ++seed) {
                    auto inst = graph::npls_from_family(graph::generate_family(seed, cfg_.max_rank, cfg_.max_width));
                    auto report = search::verify_npls_conditions(inst, 0);
                    search::solve_npls(inst, 0, cfg_.max_steps);
                    verified += report.all_passed();
                }
                auto t1 = Clock::now();
                std::size_t extracted = 0;
                for (std::uint64_t seed = cfg_.seed; seed < cfg_.seed + cfg_.count; ++seed) {
                    auto d = proof::random_derivation(seed, {proof::Mode::npls, 10, 500});
                    extracted += extract::extract_witness_npls(extract::make_context(d, proof::Mode::npls), cfg_.max_steps)
                                     .verified;
                }
                auto t2 = Clock::now();
                all_ok = verified == cfg_.count && extracted == cfg_.count;

                if (machine()) {
                    record(Json{{"record", "bench"}, {"phase", "families"}, {"count", cfg_.count}, {"passed", verified},
                        {"ms", ms(t1 - t0)}});
                    record(Json{{"record", "bench"}, {"phase", "derivations"}, {"count", cfg_.count},
                        {"passed", extracted}, {"ms", ms(t2 - t1)}});
                }
                else {
                    out_ << std::fixed << std::setprecision(1);
                    out_ << "families     " << verified << "/" << cfg_.count << " pass  " << ms(t1 - t0) << " ms\n";
                    out_ << "derivations  " << extracted << "/" << cfg_.count << " pass  " << ms(t2 - t1) << " ms\n";
                }
                return all_ok ? ExitCode::ok : ExitCode::failure;
            }

        private:
            /// Steepest descent from node 0.
            static auto digraph_pls(const graph::CostedDigraph & g) -> search::PlsInstance
            {
                return search::steepest_descent_pls(graph::pls_from_digraph(g, 0));
            }

            const RunConfig & cfg_;
            std::ostream & out_;
        };
    }

    auto resolve_input(const std::string & path) -> std::string
    {
        namespace fs = std::filesystem;
        if (fs::exists(path))
            return path;
        if (const char * dir = std::getenv("NPLS_FIXTURES"); dir && *dir) {
            auto candidate = fs::path(dir) / path;
            if (fs::exists(candidate))
                return candidate.string();
        }
        return path;
    }

    auto execute(const RunConfig & cfg, std::ostream & out, std::ostream & err) -> ExitCode
    {
        Session session(cfg, out);
        try {
            switch (cfg.command) {
            case Command::validate: return session.validate();
            case Command::extract: return session.extract();
            case Command::solve: return session.solve();
            case Command::verify: return session.verify();
            case Command::gen_graph: return session.gen_graph();
            case Command::bench: return session.bench();
            }
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return ExitCode::input_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return ExitCode::failure;
        }
        return ExitCode::failure;
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Nested polynomial local search: solvers, proof compilers and checkers", "npls"};
        app.require_subcommand(1);

        RunConfig cfg;
        std::string mode = "auto";
        std::string format = "text";

        auto add_common = [&](CLI::App * sub) {
            sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
        };
        auto add_input = [&](CLI::App * sub) {
            sub->add_option("input", cfg.input_path, "Derivation, template, digraph or family file")->required();
            sub->add_option("--mode", mode, "Formula-class mode")->check(CLI::IsMember({"auto", "any", "pls", "npls"}));
            sub->add_option("--x", cfg.x_value, "Value substituted for x in templates")
                ->check(CLI::Range(std::uint64_t{0}, max_x_value));
            add_common(sub);
        };
        auto add_steps = [&](CLI::App * sub) {
            sub->add_option("--max-steps", cfg.max_steps, "Step budget for the solvers")->check(CLI::PositiveNumber);
        };
        auto add_family = [&](CLI::App * sub) {
            sub->add_option("--seed", cfg.seed, "Generator seed");
            sub->add_option("--max-rank", cfg.max_rank, "Largest rank")
                ->check(CLI::Range(std::uint64_t{0}, graph::max_generated_rank));
            sub->add_option("--max-width", cfg.max_width, "Largest graph width")
                ->check(CLI::Range(std::uint64_t{1}, graph::max_generated_width));
        };

        auto * validate = app.add_subcommand("validate", "Check every rule instance of a derivation");
        add_input(validate);
        auto * extract = app.add_subcommand("extract", "Compile a derivation and extract a verified witness");
        add_input(extract);
        add_steps(extract);
        auto * solve = app.add_subcommand("solve", "Run the solver on a family, digraph or compiled derivation");
        add_input(solve);
        add_steps(solve);
        auto * verify = app.add_subcommand("verify", "Check the nine condition groups exhaustively");
        add_input(verify);
        auto * gen = app.add_subcommand("gen-graph", "Write a random nested graph family");
        add_family(gen);
        gen->add_option("--out", cfg.output_path, "Output file (stdout when omitted)");
        add_common(gen);
        auto * bench = app.add_subcommand("bench", "Time generated families and derivations");
        add_family(bench);
        add_steps(bench);
        bench->add_option("--count", cfg.count, "Number of seeds")->check(CLI::Range(1, 10000));
        add_common(bench);

        std::vector<std::string> argv_storage{"npls"};
        argv_storage.insert(argv_storage.end(), args.begin(), args.end());
        std::vector<char *> argv;
        for (auto & a : argv_storage)
            argv.push_back(a.data());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return 0;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n';
            return static_cast<int>(ExitCode::input_error);
        }

        if (*validate)
            cfg.command = Command::validate;
        else if (*extract)
            cfg.command = Command::extract;
        else if (*solve)
            cfg.command = Command::solve;
        else if (*verify)
            cfg.command = Command::verify;
        else if (*gen)
            cfg.command = Command::gen_graph;
        else
            cfg.command = Command::bench;

        cfg.mode = mode == "pls"    ? ModeChoice::pls
                 : mode == "npls" ? ModeChoice::npls
                 : mode == "any"  ? ModeChoice::any
                                  : ModeChoice::automatic;
        cfg.output = format == "machine" ? OutputFormat::machine : OutputFormat::text;
        return static_cast<int>(execute(cfg, out, err));
    }
}
