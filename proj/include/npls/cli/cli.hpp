#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace npls::cli
{
    enum class ExitCode
    {
        ok = 0,
        failure = 1,
        input_error = 2,
    };

    enum class Command
    {
        validate,
        extract,
        solve,
        verify,
        gen_graph,
        bench,
    };

    enum class OutputFormat
    {
        text,
        machine,
    };

    enum class ModeChoice
    {
        automatic,
        any,
        pls,
        npls,
    };

    struct RunConfig
    {
        Command command = Command::validate;
        std::string input_path;
        ModeChoice mode = ModeChoice::automatic;
        std::uint64_t x_value = 0;
        std::uint64_t seed = 1;
        std::optional<std::uint64_t> max_steps;
        std::uint64_t max_rank = 2;
        std::uint64_t max_width = 4;
        std::uint64_t count = 20;
        std::string output_path;
        OutputFormat output = OutputFormat::text;
    };

    /// Largest accepted --x; keeps template bounds and point spaces at desk scale.
    inline constexpr std::uint64_t max_x_value = 1u << 16;

    /// An existing path as given, else the same name under $NPLS_FIXTURES.
    auto resolve_input(const std::string & path) -> std::string;

    /// Runs one command. Exit codes: 0 success, 1 semantic failure, 2 I/O or parse error.
    auto execute(const RunConfig & cfg, std::ostream & out, std::ostream & err) -> ExitCode;

    /// Parses command-line arguments (without the program name) and executes them.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
