#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "enumlab/bitstring.hpp"
#include "enumlab/chain.hpp"
#include "enumlab/numeric.hpp"
#include "enumlab/powerset.hpp"
#include "enumlab/ratio.hpp"
#include "enumlab/realline.hpp"
#include "enumlab/subset_codec.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// cpp_int <-> python int, through the decimal string form.
template <>
struct type_caster<enumlab::BigInt> {
    PYBIND11_TYPE_CASTER(enumlab::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object s = str(src);
        value = enumlab::BigInt(s.cast<std::string>());
        return true;
    }

    static handle cast(const enumlab::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

// cpp_rational <-> fractions.Fraction (ints load too).
template <>
struct type_caster<enumlab::Rational> {
    PYBIND11_TYPE_CASTER(enumlab::Rational, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;  // exact inputs only
        if (PyLong_Check(src.ptr())) {
            value = enumlab::Rational(enumlab::BigInt(str(src).cast<std::string>()));
            return true;
        }
        if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
        enumlab::BigInt num(str(src.attr("numerator")).cast<std::string>());
        enumlab::BigInt den(str(src.attr("denominator")).cast<std::string>());
        if (den == 0) return false;
        value = enumlab::Rational(num, den);
        return true;
    }

    static handle cast(const enumlab::Rational& v, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        object num = reinterpret_steal<object>(PyLong_FromString(numerator(v).str().c_str(), nullptr, 10));
        object den = reinterpret_steal<object>(PyLong_FromString(denominator(v).str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace enumlab;

std::vector<BigInt> elems_of(const subsets::FiniteSubset& s) { return s.elements(); }

std::vector<std::vector<BigInt>> table_out(const std::vector<subsets::FiniteSubset>& t) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(t.size());
    for (const auto& s : t) out.push_back(elems_of(s));
    return out;
}

std::vector<subsets::FiniteSubset> table_in(const std::vector<std::vector<BigInt>>& t) {
    std::vector<subsets::FiniteSubset> out;
    out.reserve(t.size());
    for (const auto& e : t) out.emplace_back(e);
    return out;
}

bits::StringArray array_in(const std::vector<std::string>& rows) {
    std::vector<bits::BitString> parsed;
    parsed.reserve(rows.size());
    for (const auto& r : rows) parsed.push_back(bits::BitString::parse(r));
    return bits::StringArray(std::move(parsed));
}

std::vector<std::string> array_out(const bits::StringArray& a) {
    std::vector<std::string> out;
    out.reserve(a.rows());
    for (const auto& r : a.all()) out.push_back(r.str());
    return out;
}

bits::DcFamily family_of(const std::string& name) {
    if (name == "full") return bits::DcFamily::Full;
    if (name == "s2") return bits::DcFamily::S2;
    if (name == "sq1") return bits::DcFamily::Sq1Bound;
    throw std::invalid_argument("dc family must be full, s2 or sq1");
}

py::dict verdict_dict(const chains::Verdict& v) {
    py::list flags, warnings;
    for (const auto& f : v.flagged) flags.append(chains::to_string(f.statement));
    for (const auto& w : v.warnings) warnings.append(w);
    py::dict d;
    d["kind"] = chains::to_string(v.kind);
    d["flags"] = flags;
    d["warnings"] = warnings;
    return d;
}

py::dict report_dict(const ratio::RatioReport& r) {
    py::dict d;
    d["kind"] = ratio::to_string(r.kind);
    d["method"] = r.method == ratio::RatioMethod::Symbolic ? "symbolic" : "numeric";
    if (r.limit) d["limit"] = *r.limit;
    if (r.tolerance) d["tolerance"] = *r.tolerance;
    py::list samples;
    for (const auto& [n, value] : r.samples) samples.append(py::make_tuple(n, value));
    d["samples"] = samples;
    return d;
}

}  // namespace

PYBIND11_MODULE(_enumlab, m) {
    m.doc() = "finite enumeration lab: subset codecs, power-set builders, diagonal "
              "covers, relative cardinality, reductio chains, and the unit-interval "
              "rational experiments";

    // subset codec
    m.def("class_size",
          [](std::uint64_t i, const BigInt& g) { return subsets::class_size({i, g}); },
          py::arg("cardinality"), py::arg("greatest"));
    m.def("build_class",
          [](std::uint64_t i, const BigInt& g) { return table_out(subsets::build_class({i, g})); },
          py::arg("cardinality"), py::arg("greatest"));
    m.def("rank", [](const std::vector<BigInt>& elems) {
        auto p = subsets::rank(subsets::FiniteSubset(elems));
        return py::make_tuple(p.cardinality, p.index);
    });
    m.def("unrank", [](std::uint64_t i, const BigInt& jprime) {
        return elems_of(subsets::unrank({i, jprime}));
    }, py::arg("cardinality"), py::arg("jprime"));
    m.def("enumerate_subsets",
          [](std::uint64_t count) { return table_out(subsets::enumerate_subsets(count)); });
    m.def("enumeration_index", [](const std::vector<BigInt>& elems) {
        return subsets::enumeration_index(subsets::FiniteSubset(elems));
    });
    m.def("pair_index", &pair_index);

    // power-set builders
    m.def("proof3_table", [](unsigned i) { return table_out(powerset::proof3_table(i)); });
    m.def("proof3_extend", [](const std::vector<std::vector<BigInt>>& t) {
        return table_out(powerset::proof3_extend(table_in(t)));
    });
    m.def("proof2_build", [](unsigned k, unsigned m_) { return table_out(powerset::proof2_build(k, m_)); },
          py::arg("max_cardinality"), py::arg("universe"));
    m.def("powers_of_two", &powerset::powers_of_two);

    // bitstring lab
    m.def("full_array", [](unsigned k) { return array_out(bits::full_array(k)); });
    m.def("antidiagonal", [](const std::vector<std::string>& rows) {
        return bits::antidiagonal(array_in(rows)).str();
    });
    m.def("locate", [](const std::vector<std::string>& rows, const std::string& s) {
        return bits::locate(array_in(rows), bits::BitString::parse(s));
    });
    m.def("diagonal_cover_finite", &bits::diagonal_cover_finite, py::arg("rows"), py::arg("length"));
    m.def("dc_sequence", [](const std::string& family, unsigned k_max) {
        py::list out;
        for (const auto& e : bits::dc_sequence(family_of(family), k_max))
            out.append(py::make_tuple(e.k, e.num, e.den));
        return out;
    });
    m.def("s2_array", [](std::size_t pairs, std::size_t length) {
        return array_out(bits::s2_array(pairs, length));
    });
    m.def("hamming_census", [](unsigned k) {
        auto c = bits::hamming_census(k);
        return py::make_tuple(c.census, c.included, c.excluded);
    });

    // relative cardinality
    py::class_<ratio::CountingFormula>(m, "Formula")
        .def("__call__", [](const ratio::CountingFormula& f, const BigInt& n) { return f(n); });
    m.def("floor_linear", &ratio::CountingFormula::floor_linear, py::arg("scale_num"),
          py::arg("scale_den"), py::arg("shift") = BigInt(0));
    m.def("poly", &ratio::CountingFormula::poly);
    m.def("exponential", &ratio::CountingFormula::exponential);
    m.def("affine_exponential", &ratio::CountingFormula::affine_exponential);
    m.def("ident_shift", &ratio::CountingFormula::ident_shift);
    m.def("custom_formula", [](std::function<BigInt(const BigInt&)> f) {
        return ratio::CountingFormula::custom(std::move(f));
    });
    m.def("parse_formula", [](const std::string& text) { return ratio::CountingFormula::parse(text); });
    m.def("rho_finite", &ratio::rho_finite);
    m.def("rho_limit",
          [](const ratio::CountingFormula& a, const ratio::CountingFormula& b, bool ack) {
              return report_dict(ratio::rho_limit(a, b, ack));
          },
          py::arg("phi_a"), py::arg("phi_b"), py::arg("custom_acknowledged") = false);
    m.def("equicardinal", &ratio::equicardinal, py::arg("phi_a"), py::arg("phi_b"),
          py::arg("custom_acknowledged") = false);
    m.def("sample_ratio", &ratio::sample_ratio);
    m.def("dc_as_rho", [](unsigned k_max) {
        py::list out;
        for (const auto& e : ratio::dc_as_rho(k_max)) out.append(py::make_tuple(e.k, e.num, e.den));
        return out;
    });

    // proof chains
    m.def("chain_render", [](const std::string& text) { return chains::render(chains::parse(text)); });
    m.def("chain_classify",
          [](const std::string& text) { return verdict_dict(chains::classify(chains::parse(text))); });
    m.def("chain_audit", [](const std::string& text) {
        auto report = chains::audit(chains::parse(text));
        py::dict d = verdict_dict(report.verdict);
        d["pass"] = report.pass;
        return d;
    });

    // unit-interval rationals
    m.def("q01_list", &realline::q01_list);
    m.def("to_binary",
          [](const Rational& q, std::size_t digits) { return realline::to_binary(q, digits).str(); });
    m.def("eventually_periodic", [](const Rational& q) {
        auto e = realline::eventually_periodic(q);
        return py::make_tuple(e.prefix.str(), e.period.str());
    });
    m.def("antidiag_rationals",
          [](std::size_t n, std::size_t digits, std::size_t search_limit) {
              auto r = realline::antidiag_rationals(n, digits, search_limit);
              return py::make_tuple(r.bits.str(), r.match);
          },
          py::arg("rows"), py::arg("digits"), py::arg("search_limit") = 1000);
    m.def("reorder_demo",
          [](const Rational& q_diag, std::size_t window, const std::vector<Rational>& queries) {
              auto r = realline::reorder_demo(q_diag, window, queries);
              py::list placements;
              for (const auto& p : r.placements)
                  placements.append(py::make_tuple(p.query, p.row, p.feasible));
              py::dict d;
              d["placements"] = placements;
              d["excluded"] = r.excluded;
              d["antidiagonal_bits"] = r.antidiagonal_bits.str();
              d["antidiagonal"] = r.antidiagonal;
              return d;
          });
    m.def("nested_intervals",
          [](const std::vector<Rational>& pool, const Rational& lo, const Rational& hi,
             std::size_t steps) {
              auto run = realline::nested_intervals(pool, {lo, hi}, steps);
              py::list intervals, picks;
              for (const auto& iv : run.intervals) intervals.append(py::make_tuple(iv.lo, iv.hi));
              for (const auto& [a, b] : run.picks) picks.append(py::make_tuple(a, b));
              py::dict d;
              d["intervals"] = intervals;
              d["picks"] = picks;
              d["exhausted"] = run.exhausted;
              return d;
          },
          py::arg("pool"), py::arg("lo"), py::arg("hi"), py::arg("steps"));
}
