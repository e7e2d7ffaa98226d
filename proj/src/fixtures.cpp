#include "hek/fixtures.hpp"

namespace hek {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

}  // namespace

Rat random_rat(std::mt19937_64& rng) {
    // half the draws are small integers so that structured (e.g. symmetric)
    // sextuples actually occur and exercise the degenerate-basis path
    if (rng() % 2 == 0) return Rat(draw(rng, -8, 8));
    return Rat(Int(draw(rng, -30, 30)), Int(draw(rng, 1, 5)));
}

std::array<Rat, 6> random_branch_tuple(std::mt19937_64& rng) {
    std::array<Rat, 6> a;
    for (std::size_t j = 0; j < 6; ++j) {
        for (;;) {
            const Rat v = random_rat(rng);
            bool fresh = true;
            for (std::size_t k = 0; k < j; ++k)
                if (a[k] == v) fresh = false;
            if (fresh) {
                a[j] = v;
                break;
            }
        }
    }
    return a;
}

std::array<Rat, 6> random_independent_branch(std::mt19937_64& rng) {
    for (;;) {
        const auto a = random_branch_tuple(rng);
        if (make_branch(a).basis->independent()) return a;
    }
}

std::array<Rat, 3> random_lambda_triple(std::mt19937_64& rng) {
    std::array<Rat, 3> l;
    for (std::size_t j = 0; j < 3; ++j) {
        for (;;) {
            const Rat v = random_rat(rng);
            if (v == 0 || v == 1) continue;
            bool fresh = true;
            for (std::size_t k = 0; k < j; ++k)
                if (l[k] == v) fresh = false;
            if (fresh) {
                l[j] = v;
                break;
            }
        }
    }
    return l;
}

FixtureCorpus make_fixtures(std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("fixture count must be positive");
    FixtureCorpus out;
    out.seed = seed;
    out.count = count;
    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.sextuples.size()) < count) {
        const auto a = random_branch_tuple(rng);
        if (make_branch(a).basis->independent()) out.sextuples.push_back(a);
        else out.degenerate.push_back(a);
    }
    for (int i = 0; i < count; ++i) out.lambda_triples.push_back(random_lambda_triple(rng));
    return out;
}

nlohmann::json corpus_to_json(const FixtureCorpus& c) {
    auto tuple_list = [](const auto& list) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& tuple : list) {
            nlohmann::json row = nlohmann::json::array();
            for (const Rat& v : tuple) row.push_back(rat_str(v));
            out.push_back(row);
        }
        return out;
    };
    return nlohmann::json{{"schema", "1"},
                          {"seed", c.seed},
                          {"count", c.count},
                          {"branch_sextuples", tuple_list(c.sextuples)},
                          {"lambda_triples", tuple_list(c.lambda_triples)},
                          {"degenerate_sextuples", tuple_list(c.degenerate)}};
}

}  // namespace hek
