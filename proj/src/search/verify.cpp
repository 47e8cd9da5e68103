#include "npls/search/verify.hpp"

#include <exception>
#include <optional>
#include <sstream>

namespace npls::search
{
    auto to_string(Condition condition) -> std::string
    {
        switch (condition) {
        case Condition::point_size: return "point-size";
        case Condition::generated_source: return "generated-source";
        case Condition::neighbor_domain: return "neighbor-domain";
        case Condition::rank_zero: return "rank-zero";
        case Condition::rank_descent: return "rank-descent";
        case Condition::extraction: return "extraction";
        case Condition::initial_source: return "initial-source";
        case Condition::initial_target: return "initial-target";
        case Condition::cost_descent: return "cost-descent";
        }
        return "unknown";
    }

    auto ConditionReport::all_passed() const -> bool
    {
        for (auto & r : results)
            if (! r.passed)
                return false;
        return true;
    }

    auto ConditionReport::result(Condition condition) const -> const ConditionResult &
    {
        for (auto & r : results)
            if (r.condition == condition)
                return r;
        throw std::out_of_range("condition not in report: " + to_string(condition));
    }

    auto ConditionReport::render() const -> std::string
    {
        std::ostringstream out;
        for (auto & r : results) {
            out << to_string(r.condition) << ": " << (r.passed ? "pass" : "FAIL");
            if (! r.passed) {
                out << " at (";
                for (std::size_t i = 0; i < r.counterexample.size(); ++i)
                    out << (i ? ", " : "") << r.counterexample[i];
                out << ")";
                if (! r.message.empty())
                    out << " " << r.message;
            }
            out << '\n';
        }
        return out.str();
    }

    namespace
    {
        class Checker
        {
        public:
            Checker(const NplsInstance & inst, std::uint64_t x, std::uint64_t domain) :
                inst_(inst),
                x_(x),
                n_(domain)
            {
                for (auto c : all_conditions)
                    report_.results.push_back({c, true, {}, {}});
            }

            auto run() -> ConditionReport
            {
                tabulate();
                check_initials();
                check_generated_sources();
                check_neighbourhood();
                check_rank_descent();
                check_extraction();
                return std::move(report_);
            }

        private:
            auto entry(Condition c) -> ConditionResult &
            {
                return report_.results[static_cast<std::size_t>(c)];
            }

            void fail(Condition c, std::vector<std::uint64_t> tuple, std::string message)
            {
                auto & r = entry(c);
                if (! r.passed)
                    return;
                r.passed = false;
                r.counterexample = std::move(tuple);
                r.message = std::move(message);
            }

            auto fits(PointId p) const -> bool
            {
                return p.bits < n_;
            }

            auto target(std::uint64_t s, std::uint64_t y) const -> bool
            {
                return target_[s * n_ + y];
            }

            void tabulate()
            {
                source_.assign(n_, false);
                rank_.assign(n_, 0);
                target_.assign(n_ * n_, false);
                cost_.assign(n_, 0);
                cost_ok_.assign(n_, true);

                for (std::uint64_t s = 0; s < n_; ++s) {
                    try {
                        source_[s] = inst_.sources(x_, PointId{s});
                    }
                    catch (const std::exception & e) {
                        fail(Condition::neighbor_domain, {s}, std::string("sources threw: ") + e.what());
                    }
                }

                try {
                    if (inst_.sources(x_, PointId{n_}))
                        fail(Condition::point_size, {n_}, "point beyond the d-bound accepted as a source");
                }
                catch (const std::exception &) {
                    // rejecting by exception is acceptable
                }

                for (std::uint64_t s = 0; s < n_; ++s) {
                    if (! source_[s])
                        continue;
                    try {
                        rank_[s] = inst_.rank(x_, PointId{s});
                    }
                    catch (const std::exception & e) {
                        fail(Condition::rank_descent, {s}, std::string("rank threw: ") + e.what());
                    }
                    for (std::uint64_t y = 0; y < n_; ++y) {
                        try {
                            target_[s * n_ + y] = inst_.targets(x_, PointId{s}, PointId{y});
                        }
                        catch (const std::exception & e) {
                            fail(Condition::neighbor_domain, {s, y}, std::string("targets threw: ") + e.what());
                        }
                    }
                    try {
                        if (inst_.targets(x_, PointId{s}, PointId{n_}))
                            fail(Condition::point_size, {s, n_}, "point beyond the d-bound accepted as a target");
                    }
                    catch (const std::exception &) {
                    }
                }

                for (std::uint64_t y = 0; y < n_; ++y) {
                    try {
                        cost_[y] = inst_.cost(x_, PointId{y});
                    }
                    catch (const std::exception &) {
                        cost_ok_[y] = false;
                    }
                }
            }

            void check_initials()
            {
                try {
                    auto i = inst_.initial_source(x_);
                    if (! fits(i))
                        fail(Condition::point_size, {i.bits}, "initial source exceeds the d-bound");
                    else if (! source_[i.bits])
                        fail(Condition::initial_source, {i.bits}, "initial source is not a source");
                }
                catch (const std::exception & e) {
                    fail(Condition::initial_source, {}, std::string("initial_source threw: ") + e.what());
                }

                for (std::uint64_t s = 0; s < n_; ++s) {
                    if (! source_[s])
                        continue;
                    try {
                        auto t = inst_.initial_target(x_, PointId{s});
                        if (! fits(t))
                            fail(Condition::point_size, {s, t.bits}, "initial target exceeds the d-bound");
                        else if (! target(s, t.bits))
                            fail(Condition::initial_target, {s, t.bits}, "initial target is not a target of s");
                    }
                    catch (const std::exception & e) {
                        fail(Condition::initial_target, {s}, std::string("initial_target threw: ") + e.what());
                    }
                }
            }

            void check_generated_sources()
            {
                generated_.assign(n_ * n_, n_);
                for (std::uint64_t s = 0; s < n_; ++s) {
                    if (! source_[s])
                        continue;
                    for (std::uint64_t y = 0; y < n_; ++y) {
                        if (! target(s, y))
                            continue;
                        try {
                            auto g = inst_.gen_source(x_, PointId{s}, PointId{y});
                            if (! fits(g)) {
                                fail(Condition::point_size, {s, y, g.bits}, "generated source exceeds the d-bound");
                                continue;
                            }
                            generated_[s * n_ + y] = g.bits;
                            if (! source_[g.bits])
                                fail(Condition::generated_source, {s, y}, "generated source " + std::to_string(g.bits)
                                    + " is not a source");
                        }
                        catch (const std::exception & e) {
                            fail(Condition::generated_source, {s, y}, std::string("gen_source threw: ") + e.what());
                        }
                    }
                }
            }

            void check_neighbourhood()
            {
                self_loop_.assign(n_ * n_, false);
                for (std::uint64_t s = 0; s < n_; ++s) {
                    const bool is_source = source_[s];
                    const bool rank_zero = is_source && rank_[s] == 0;
                    for (std::uint64_t y = 0; y < n_; ++y) {
                        std::optional<std::uint64_t> step;
                        bool step_known = false;
                        if (rank_zero && target(s, y)) {
                            try {
                                auto z = inst_.rank0_neighbor(x_, PointId{s}, PointId{y});
                                if (! fits(z))
                                    fail(Condition::point_size, {s, y, z.bits}, "rank-0 neighbour exceeds the d-bound");
                                step = z.bits;
                                step_known = true;
                            }
                            catch (const std::exception & e) {
                                fail(Condition::rank_zero, {s, y}, std::string("rank0_neighbor threw: ") + e.what());
                            }
                        }

                        for (std::uint64_t z = 0; z < n_; ++z) {
                            bool related = false;
                            try {
                                related = inst_.neighbor(x_, PointId{s}, PointId{y}, PointId{z});
                            }
                            catch (const std::exception & e) {
                                fail(Condition::neighbor_domain, {s, y, z}, std::string("neighbor threw: ") + e.what());
                                continue;
                            }

                            if (y == z)
                                self_loop_[s * n_ + y] = related;

                            if (step_known && related != (*step == z))
                                fail(Condition::rank_zero, {s, y, z},
                                    related ? "N holds but the rank-0 step goes elsewhere"
                                            : "rank-0 step lands here but N does not hold");

                            if (! related)
                                continue;

                            if (! (is_source && target(s, y) && target(s, z)))
                                fail(Condition::neighbor_domain, {s, y, z}, "N holds outside sources x targets");

                            if (y != z) {
                                if (! cost_ok_[y] || ! cost_ok_[z])
                                    fail(Condition::cost_descent, {s, y, z}, "cost threw");
                                else if (! (cost_[y] > cost_[z]))
                                    fail(Condition::cost_descent, {s, y, z},
                                        "cost " + std::to_string(cost_[y]) + " -> " + std::to_string(cost_[z])
                                            + " does not decrease");
                            }
                        }
                    }
                }
            }

            void check_rank_descent()
            {
                for (std::uint64_t s = 0; s < n_; ++s) {
                    if (! source_[s] || rank_[s] == 0)
                        continue;
                    for (std::uint64_t y = 0; y < n_; ++y) {
                        if (! target(s, y) || self_loop_[s * n_ + y])
                            continue;
                        auto g = generated_[s * n_ + y];
                        if (g >= n_)
                            continue;
                        std::uint64_t child_rank = rank_[g];
                        if (! source_[g]) {
                            try {
                                child_rank = inst_.rank(x_, PointId{g});
                            }
                            catch (const std::exception & e) {
                                fail(Condition::rank_descent, {s, y}, std::string("rank threw: ") + e.what());
                                continue;
                            }
                        }
                        if (! (child_rank < rank_[s]))
                            fail(Condition::rank_descent, {s, y},
                                "generated source " + std::to_string(g) + " has rank " + std::to_string(child_rank)
                                    + " >= " + std::to_string(rank_[s]));
                    }
                }
            }

            void check_extraction()
            {
                for (std::uint64_t s = 0; s < n_; ++s) {
                    if (! source_[s] || rank_[s] == 0)
                        continue;
                    for (std::uint64_t y = 0; y < n_; ++y) {
                        if (! target(s, y))
                            continue;
                        auto g = generated_[s * n_ + y];
                        if (g >= n_)
                            continue;
                        for (std::uint64_t z = 0; z < n_; ++z) {
                            if (! self_loop_[g * n_ + z])
                                continue;
                            try {
                                auto u = inst_.extract(x_, PointId{s}, PointId{y}, PointId{z});
                                if (! fits(u)) {
                                    fail(Condition::point_size, {s, y, z, u.bits}, "extracted result exceeds the d-bound");
                                    continue;
                                }
                                if (! inst_.neighbor(x_, PointId{s}, PointId{y}, u))
                                    fail(Condition::extraction, {s, y, z},
                                        "extracted result " + std::to_string(u.bits) + " is not a neighbour of y");
                            }
                            catch (const std::exception & e) {
                                fail(Condition::extraction, {s, y, z}, std::string("extract threw: ") + e.what());
                            }
                        }
                    }
                }
            }

            const NplsInstance & inst_;
            std::uint64_t x_;
            std::uint64_t n_;
            ConditionReport report_;

            std::vector<bool> source_;
            std::vector<std::uint64_t> rank_;
            std::vector<bool> target_;
            std::vector<std::uint64_t> cost_;
            std::vector<bool> cost_ok_;
            std::vector<std::uint64_t> generated_;
            std::vector<bool> self_loop_;
        };
    }

    auto verify_npls_conditions(const NplsInstance & inst, std::uint64_t x, unsigned max_bits) -> ConditionReport
    {
        auto domain = enumerable_domain(inst.d_bound.at_length_of(x), max_bits);
        return Checker(inst, x, domain).run();
    }
}
