#include <lonet/nk.hpp>

#include <lonet/format.hpp>
#include <lonet/rng.hpp>

#include <stdexcept>

namespace lonet::nk {

NkInstance generateNk(int n, int k, std::uint64_t seed) {
    if (n < 1 || n > kMaxBinaryLength) {
        throw std::invalid_argument("NK: N must lie in [1, 63]");
    }
    if (k < 0 || k > n - 1) {
        throw std::invalid_argument("NK: K must lie in [0, N-1]");
    }
    NkInstance inst;
    inst.n = n;
    inst.k = k;
    inst.seed = seed;
    inst.links.resize(static_cast<std::size_t>(n));
    inst.tables.resize(static_cast<std::size_t>(n));
    std::vector<int> others;
    for (int i = 0; i < n; ++i) {
        Rng rng(deriveStreamSeed(seed, static_cast<std::uint64_t>(i)));
        others.clear();
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                others.push_back(j);
            }
        }
        for (int m = 0; m < k; ++m) {
            const auto pick = static_cast<std::size_t>(m) +
                              rng.below(static_cast<std::uint64_t>(others.size()) -
                                        static_cast<std::uint64_t>(m));
            std::swap(others[static_cast<std::size_t>(m)], others[pick]);
        }
        auto& links = inst.links[static_cast<std::size_t>(i)];
        links.assign(others.begin(), others.begin() + k);
        auto& table = inst.tables[static_cast<std::size_t>(i)];
        table.resize(inst.tableSize());
        for (double& v : table) {
            v = rng.uniform01();
        }
    }
    return inst;
}

void validate(const NkInstance& inst) {
    if (inst.n < 1 || inst.n > kMaxBinaryLength || inst.k < 0 || inst.k > inst.n - 1) {
        throw std::invalid_argument("NK: (N, K) out of range");
    }
    if (inst.links.size() != static_cast<std::size_t>(inst.n) ||
        inst.tables.size() != static_cast<std::size_t>(inst.n)) {
        throw std::invalid_argument("NK: expected N link rows and N table rows");
    }
    for (int i = 0; i < inst.n; ++i) {
        const auto& links = inst.links[static_cast<std::size_t>(i)];
        if (links.size() != static_cast<std::size_t>(inst.k)) {
            throw std::invalid_argument("NK: link row " + std::to_string(i) + " must hold K entries");
        }
        std::vector<bool> seen(static_cast<std::size_t>(inst.n), false);
        for (int l : links) {
            if (l < 0 || l >= inst.n || l == i || seen[static_cast<std::size_t>(l)]) {
                throw std::invalid_argument("NK: link row " + std::to_string(i) +
                                            " must hold distinct loci other than itself");
            }
            seen[static_cast<std::size_t>(l)] = true;
        }
        const auto& table = inst.tables[static_cast<std::size_t>(i)];
        if (table.size() != inst.tableSize()) {
            throw std::invalid_argument("NK: table row " + std::to_string(i) +
                                        " must hold 2^(K+1) entries");
        }
        for (double v : table) {
            if (!(v >= 0.0 && v < 1.0)) {
                throw std::invalid_argument("NK: contributions must lie in [0, 1)");
            }
        }
    }
}

double nkFitnessOfRank(const NkInstance& inst, Rank bits) {
    double sum = 0.0;
    for (int i = 0; i < inst.n; ++i) {
        const auto& links = inst.links[static_cast<std::size_t>(i)];
        std::size_t index = (bits >> i) & 1u;
        for (int l : links) {
            index = (index << 1) | ((bits >> l) & 1u);
        }
        sum += inst.tables[static_cast<std::size_t>(i)][index];
    }
    return sum / static_cast<double>(inst.n);
}

double nkFitness(const NkInstance& inst, const Solution& s) {
    if (s.kind() != Representation::binary || s.size() != inst.n) {
        throw std::invalid_argument("NK: expected a bit string of length " + std::to_string(inst.n));
    }
    return nkFitnessOfRank(inst, rank(s));
}

std::string toText(const NkInstance& inst) {
    std::string out = "NK " + std::to_string(inst.n) + " " + std::to_string(inst.k) + " " +
                      std::to_string(inst.seed) + "\n";
    for (const auto& links : inst.links) {
        for (std::size_t m = 0; m < links.size(); ++m) {
            out += (m ? " " : "") + std::to_string(links[m]);
        }
        out += "\n";
    }
    for (const auto& table : inst.tables) {
        for (std::size_t m = 0; m < table.size(); ++m) {
            out += (m ? " " : "") + shortestDecimal(table[m]);
        }
        out += "\n";
    }
    return out;
}

NkInstance parseNk(std::string_view text) {
    TokenStream tokens(text, "#");
    tokens.expectWord("NK");
    NkInstance inst;
    const auto headerLine = tokens.peek().line;
    inst.n = static_cast<int>(tokens.nextInt("N"));
    inst.k = static_cast<int>(tokens.nextInt("K"));
    inst.seed = tokens.nextUnsigned("seed");
    if (inst.n < 1 || inst.n > kMaxBinaryLength || inst.k < 0 || inst.k > inst.n - 1) {
        throw ParseError("NK header: (N, K) out of range", headerLine, 1);
    }
    inst.links.assign(static_cast<std::size_t>(inst.n), {});
    for (auto& links : inst.links) {
        for (int m = 0; m < inst.k; ++m) {
            links.push_back(static_cast<int>(tokens.nextInt("link locus")));
        }
    }
    inst.tables.assign(static_cast<std::size_t>(inst.n), {});
    for (auto& table : inst.tables) {
        table.resize(inst.tableSize());
        for (double& v : table) {
            v = tokens.nextDouble("contribution");
        }
    }
    if (!tokens.done()) {
        const auto& t = tokens.peek();
        throw ParseError("trailing data after NK tables", t.line, t.column);
    }
    try {
        validate(inst);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), headerLine, 1);
    }
    return inst;
}

} // namespace lonet::nk
