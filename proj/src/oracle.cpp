#include "arrtop/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "arrtop/error.hpp"

namespace arrtop {

namespace {

RatMat rref(RatMat m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (auto& x : m[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    m.resize(r);  // nonzero rows only, already in echelon order
    return m;
}

std::string flat_key(const RatMat& rows) {
    std::string key;
    for (const auto& row : rref(rows)) {
        for (const auto& x : row) key += rational_to_string(x) + ",";
        key += ";";
    }
    return key;
}

} // namespace

OracleReport sampling_oracle(const Arrangement& a, const FacePoset& poset,
                             std::uint64_t seed, std::size_t ambient_samples) {
    if (a.combinatorial())
        fail(ErrorKind::Precondition, "sampling oracle unavailable in combinatorial fan mode");
    const std::size_t dim = a.dimension();

    std::mt19937_64 rng(seed);
    auto rand_int = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::set<std::string> sampled;
    auto emit = [&](const RatVec& x) { sampled.insert(covector_of_point(a, x).str()); };

    emit(RatVec(dim, Rat(0)));
    for (std::size_t s = 0; s < ambient_samples; ++s) {
        RatVec x(dim);
        for (auto& c : x) c = Rat(rand_int(-99, 99)) / Rat(rand_int(1, 9));
        emit(x);
    }

    // Proper flats of the intersection lattice, found by closing the single
    // hyperplanes under intersection; each is sampled through a basis of its
    // own subspace so low-dimensional faces are reached too.
    std::map<std::string, RatMat> flat_rows;
    std::vector<std::string> queue;
    for (std::size_t j = 0; j < a.size(); ++j) {
        RatMat rows{a.normal(j)};
        auto key = flat_key(rows);
        if (flat_rows.emplace(key, std::move(rows)).second) queue.push_back(key);
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        RatMat rows = flat_rows.at(queue[q]);
        std::size_t rank = matrix_rank(rows);
        for (std::size_t j = 0; j < a.size(); ++j) {
            RatMat next = rows;
            next.push_back(a.normal(j));
            std::size_t next_rank = matrix_rank(next);
            if (next_rank == rank || next_rank == dim) continue;
            auto key = flat_key(next);
            if (flat_rows.emplace(key, std::move(next)).second) queue.push_back(key);
        }
    }

    for (const auto& [key, rows] : flat_rows) {
        auto basis = nullspace_basis(rows);
        for (std::size_t s = 0; s < 60; ++s) {
            RatVec x(dim, Rat(0));
            for (const auto& b : basis) {
                Rat c(rand_int(-20, 20));
                for (std::size_t i = 0; i < dim; ++i) x[i] += c * b[i];
            }
            emit(x);
        }
    }

    std::set<std::string> enumerated;
    for (const auto& f : poset.faces()) enumerated.insert(f.covector.str());

    OracleReport rep;
    rep.ambient_samples = ambient_samples;
    rep.flats = flat_rows.size();
    rep.distinct = sampled.size();
    for (const auto& s : sampled)
        if (!enumerated.count(s) && rep.extra.size() < 8) rep.extra.push_back(s);
    for (const auto& e : enumerated)
        if (!sampled.count(e) && rep.missing.size() < 8) rep.missing.push_back(e);
    rep.subset = rep.extra.empty();
    rep.equal = rep.subset && rep.missing.empty();
    if (!rep.subset)
        rep.witness = "sampled covector " + rep.extra.front() + " was not enumerated";
    else if (!rep.equal)
        rep.witness = "enumerated covector " + rep.missing.front() + " was never sampled";
    return rep;
}

} // namespace arrtop
