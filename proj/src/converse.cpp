#include "avckit/converse.hpp"

#include <cmath>

#include "avckit/parallel.hpp"

namespace avckit {

namespace {

uint64_t ipow(uint64_t base, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

ConverseResult converse_probe(const AvChannel& avc, const std::vector<Seq>& codewords,
                              const std::vector<int>& decode, uint64_t budget) {
    if (codewords.empty()) throw IndexError("converse_probe: empty codebook");
    const std::size_t n = codewords[0].size();
    for (const auto& cw : codewords)
        if (cw.size() != n) throw LengthMismatch("converse_probe: ragged codewords");
    const uint64_t num_j = ipow(static_cast<uint64_t>(avc.nj), static_cast<int>(n));
    const uint64_t num_y = ipow(static_cast<uint64_t>(avc.ny), static_cast<int>(n));
    if (num_j * num_y > budget) throw ExplosionGuard("converse_probe: |J|^n * |Y|^n over budget");
    if (decode.size() != num_y) throw DimensionMismatch("converse_probe: decode table size");

    const int m_count = static_cast<int>(codewords.size());
    std::vector<double> worst_per_j(num_j, 0.0);
    std::vector<int> worst_msg_per_j(num_j, 0);

    par_for(num_j, [&](std::size_t jr) {
        Seq jseq(n);
        uint64_t rem = jr;
        for (std::size_t i = n; i-- > 0;) {
            jseq[i] = static_cast<int>(rem % avc.nj);
            rem /= avc.nj;
        }
        double worst = 0.0;
        int worst_m = 0;
        for (int m = 0; m < m_count; ++m) {
            // e(m, j^n) = sum over y^n decoded away from m of prod q(y_i|x_i, j_i)
            double err = 0.0;
            Seq y(n, 0);
            for (uint64_t yr = 0; yr < num_y; ++yr) {
                uint64_t yrem = yr;
                for (std::size_t i = n; i-- > 0;) {
                    y[i] = static_cast<int>(yrem % avc.ny);
                    yrem /= avc.ny;
                }
                if (decode[yr] == m) continue;
                double p = 1.0;
                for (std::size_t i = 0; i < n && p > 0.0; ++i)
                    p *= avc.qp(codewords[m][i], jseq[i], y[i]);
                err += p;
            }
            if (err > worst) {
                worst = err;
                worst_m = m;
            }
        }
        worst_per_j[jr] = worst;
        worst_msg_per_j[jr] = worst_m;
    });

    ConverseResult res;
    uint64_t best_j = 0;
    for (uint64_t jr = 0; jr < num_j; ++jr)
        if (worst_per_j[jr] > worst_per_j[best_j]) best_j = jr;
    res.max_error = worst_per_j[best_j];
    res.worst_message = worst_msg_per_j[best_j];
    res.worst_jamming.assign(n, 0);
    uint64_t rem = best_j;
    for (std::size_t i = n; i-- > 0;) {
        res.worst_jamming[i] = static_cast<int>(rem % avc.nj);
        rem /= avc.nj;
    }
    return res;
}

}  // namespace avckit
