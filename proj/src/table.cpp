#include "hypasym/table.hpp"

#include "hypasym/approx.hpp"

namespace hypasym {

namespace {

double rel_error(const ScaledComplex& approx, const ScaledComplex& exact) {
    return ((approx - exact).abs() / exact.abs()).to_double();
}

} // namespace

TableReport reproduce_table(int id, int oracle_digits) {
    const ReferenceCase& ref = reference_case(id);
    const Params p{ref.r, ref.alpha, ref.y, kDefaultDelta};

    TableReport rep{&ref, f2_oracle(p, big_eval_context(oracle_digits)), {}, {}};
    const ScaledComplex f2 = to_scaled(rep.oracle.value);
    rep.rows.push_back({"F2", f2, std::nullopt});

    auto add = [&](Method m) {
        ApproxResult a = evaluate(p, m);
        for (auto& w : a.warnings) rep.warnings.push_back(std::string(to_string(m)) + ": " + w);
        rep.rows.push_back({to_string(m), a.value, rel_error(a.value, f2)});
    };
    if (ref.cor2) add(Method::cor2);
    add(Method::cor3);
    return rep;
}

} // namespace hypasym
