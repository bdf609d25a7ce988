#include <algorithm>

#include "conjugacy/oracle.hpp"
#include "conjugacy/witness.hpp"

namespace conjugacy::witness {

namespace {

// Total-unroll budget for the counterexample search, scaled so each star can
// be pumped well past the surrounding literals.
std::size_t derived_unroll_budget(const SumfreeMonomial& m) {
    const WordPair r = redux_of(m);
    const std::size_t redux_len = r.u.size() + r.v.size();
    std::size_t min_body = 0;
    for (const expr::MonomialSegment& seg : m.segments) {
        const WordPair br = redux_of(seg.body);
        const std::size_t len = br.u.size() + br.v.size();
        if (len > 0 && (min_body == 0 || len < min_body)) min_body = len;
    }
    if (min_body == 0) min_body = 1;
    const std::size_t n = std::max<std::size_t>(1, (2 * redux_len + min_body - 1) / min_body);
    return std::clamp<std::size_t>(4 * n, 4, 24);
}

} // namespace

ConjugacyReport decide(const expr::Expr& e, const DecideOptions& options) {
    expr::SnfResult snf = expr::to_snf(e, options.snf_size_limit);

    ConjugacyReport report;
    report.conjugate = true;
    report.summands.reserve(snf.summands.size());

    for (const SumfreeMonomial& raw : snf.summands) {
        SummandReport sr;
        sr.monomial = expr::simplify_monomial(raw);
        sr.expression = expr::render_monomial(sr.monomial);
        sr.witnesses = monomial_witnesses(sr.monomial);
        sr.conjugate = sr.witnesses.kind() != WitnessSet::Kind::empty;
        if (!sr.conjugate) {
            report.conjugate = false;
            if (options.find_counterexample) {
                const std::size_t budget = options.counterexample_unroll != 0
                                               ? options.counterexample_unroll
                                               : derived_unroll_budget(sr.monomial);
                sr.counterexample = oracle::find_counterexample(sr.monomial, budget,
                                                                options.counterexample_word_cap);
            }
        }
        report.summands.push_back(std::move(sr));
    }
    return report;
}

} // namespace conjugacy::witness
