#include "npls/graph/family.hpp"

#include <random>

namespace npls::graph
{
    namespace
    {
        class Draw
        {
        public:
            explicit Draw(std::uint64_t seed) : rng_(seed) {}

            /// Uniform-ish value in [0, n); plain modulo keeps output identical across standard libraries.
            auto below(std::uint64_t n) -> std::uint64_t { return rng_() % n; }

            auto pick(const std::vector<std::uint64_t> & from) -> std::uint64_t { return from[below(from.size())]; }

        private:
            std::mt19937_64 rng_;
        };

        auto distinct_costs(Draw & draw, std::uint64_t n, std::uint64_t width) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> pool(2 * width);
            for (std::uint64_t i = 0; i < pool.size(); ++i)
                pool[i] = i;
            for (std::uint64_t i = pool.size() - 1; i > 0; --i)
                std::swap(pool[i], pool[draw.below(i + 1)]);
            pool.resize(n);
            return pool;
        }

        auto cheaper_nodes(const CostedDigraph & g, std::uint64_t s) -> std::vector<std::uint64_t>
        {
            std::vector<std::uint64_t> result;
            for (std::uint64_t t = 0; t < g.n_nodes; ++t)
                if (g.cost[t] < g.cost[s])
                    result.push_back(t);
            return result;
        }

        auto make_graph(Draw & draw, std::uint64_t n, std::uint64_t width, bool functional) -> CostedDigraph
        {
            CostedDigraph g;
            g.n_nodes = n;
            g.cost = distinct_costs(draw, n, width);
            for (std::uint64_t s = 0; s < n; ++s) {
                auto cheaper = cheaper_nodes(g, s);
                if (cheaper.empty())
                    continue;
                if (functional) {
                    if (draw.below(4) != 0)
                        g.edges.insert({s, draw.pick(cheaper)});
                }
                else {
                    for (auto t : cheaper)
                        if (draw.below(2) == 0)
                            g.edges.insert({s, t});
                }
            }
            for (std::uint64_t s = 0; s < n; ++s)
                if (g.successors(s).empty())
                    g.edges.insert({s, s});
            return g;
        }

        auto make_problem(Draw & draw, std::uint64_t rank, std::uint64_t n, std::uint64_t width,
            const std::vector<std::uint64_t> & lower_pool, const std::vector<GraphProblem> & built) -> GraphProblem
        {
            GraphProblem prob;
            prob.rank = rank;
            prob.graph = make_graph(draw, n, width, rank == 0);
            if (rank == 0)
                return prob;

            for (std::uint64_t v = 0; v < n; ++v) {
                if (prob.graph.has_edge(v, v))
                    continue;
                auto child = draw.pick(lower_pool);
                prob.children[v] = child;
                auto exits = prob.graph.successors(v);
                for (auto z : problem_solutions(built[child]))
                    prob.solution_to_edge[{v, z}] = draw.pick(exits);
            }
            return prob;
        }
    }

    auto generate_family(std::uint64_t seed, std::uint64_t max_rank, std::uint64_t max_width) -> NestedGraphFamily
    {
        if (max_rank > max_generated_rank)
            throw GraphError(GraphErrc::malformed, "max_rank above " + std::to_string(max_generated_rank));
        if (max_width == 0 || max_width > max_generated_width)
            throw GraphError(GraphErrc::malformed,
                "max_width must be in 1.." + std::to_string(max_generated_width));

        Draw draw(seed);
        NestedGraphFamily f;
        const std::uint64_t pool_size = std::max<std::uint64_t>(1, max_width / 2);
        std::vector<std::uint64_t> lower_pool;

        for (std::uint64_t r = 0; r < max_rank; ++r) {
            std::vector<std::uint64_t> pool;
            for (std::uint64_t k = 0; k < pool_size; ++k) {
                auto n = 1 + draw.below(max_width);
                f.problems.push_back(make_problem(draw, r, n, max_width, lower_pool, f.problems));
                pool.push_back(f.problems.size() - 1);
            }
            lower_pool = std::move(pool);
        }

        f.problems.push_back(make_problem(draw, max_rank, max_width, max_width, lower_pool, f.problems));
        f.top = f.problems.size() - 1;
        return f;
    }
}
