#include "enumlab/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "enumlab/bitstring.hpp"
#include "enumlab/chain.hpp"
#include "enumlab/numeric.hpp"
#include "enumlab/powerset.hpp"
#include "enumlab/ratio.hpp"
#include "enumlab/realline.hpp"
#include "enumlab/subset_codec.hpp"

namespace enumlab::cli {

namespace {

using subsets::FiniteSubset;

std::string subset_cell(const FiniteSubset& s, OutputFormat fmt) {
    if (s.empty()) return "-";
    if (fmt != OutputFormat::Csv) return subsets::to_string(s);
    std::string out;  // space-joined inside CSV cells, so no quoting is needed
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s.elements()[i].str();
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void emit_subset_table(const std::vector<FiniteSubset>& entries, const std::string& record_key,
                       OutputFormat fmt, std::ostream& out) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        switch (fmt) {
            case OutputFormat::Plain: out << i << '\t' << subset_cell(entries[i], fmt) << '\n'; break;
            case OutputFormat::Csv: out << i << ',' << subset_cell(entries[i], fmt) << '\n'; break;
            case OutputFormat::Record:
                out << record_key << '[' << i << "]=" << subset_cell(entries[i], fmt) << '\n';
                break;
        }
    }
}

void cmd_dc(const std::string& family, unsigned kmax, OutputFormat fmt, std::ostream& out) {
    bits::DcFamily f;
    if (family == "full") {
        f = bits::DcFamily::Full;
    } else if (family == "s2") {
        f = bits::DcFamily::S2;
    } else if (family == "sq1") {
        f = bits::DcFamily::Sq1Bound;
    } else {
        throw std::invalid_argument("unknown dc family: '" + family + "'");
    }
    for (const bits::DcEntry& e : bits::dc_sequence(f, kmax)) {
        switch (fmt) {
            case OutputFormat::Plain:
                out << e.k << '\t' << e.num.str() << '/' << e.den.str() << '\n';
                break;
            case OutputFormat::Csv:
                out << e.k << ',' << e.num.str() << ',' << e.den.str() << '\n';
                break;
            case OutputFormat::Record:
                out << "dc[" << e.k << "]=" << e.num.str() << '/' << e.den.str() << '\n';
                break;
        }
    }
}

void cmd_rank(const std::string& elems, OutputFormat fmt, std::ostream& out) {
    FiniteSubset s = subsets::parse_subset(elems);
    subsets::RankPair p = subsets::rank(s);
    switch (fmt) {
        case OutputFormat::Plain: out << subsets::to_string(p) << '\n'; break;
        case OutputFormat::Csv: out << p.cardinality << ',' << p.index.str() << '\n'; break;
        case OutputFormat::Record:
            out << "i=" << p.cardinality << '\n' << "jprime=" << p.index.str() << '\n';
            break;
    }
}

void cmd_unrank(const std::string& pair, OutputFormat fmt, std::ostream& out) {
    FiniteSubset s = subsets::unrank(subsets::parse_rank_pair(pair));
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::Csv: out << subset_cell(s, OutputFormat::Plain) << '\n'; break;
        case OutputFormat::Record: out << "subset=" << subset_cell(s, fmt) << '\n'; break;
    }
}

void cmd_powerset(unsigned proof, unsigned i, unsigned m, unsigned k, bool has_i, bool has_m,
                  bool has_k, OutputFormat fmt, std::ostream& out) {
    std::vector<FiniteSubset> entries;
    std::string key = "entry";
    if (proof == 1) {
        if (!has_i || !has_k)
            throw std::invalid_argument("powerset --proof 1 needs --i (cardinality) and --k (greatest)");
        entries = subsets::build_class({i, BigInt(k)});
    } else if (proof == 2) {
        if (!has_k || !has_m)
            throw std::invalid_argument("powerset --proof 2 needs --k (max cardinality) and --m (universe)");
        entries = powerset::proof2_build(k, m);
    } else if (proof == 3) {
        if (!has_i) throw std::invalid_argument("powerset --proof 3 needs --i (universe size)");
        entries = powerset::proof3_table(i);
    } else {
        throw std::invalid_argument("powerset --proof must be 1, 2 or 3");
    }
    emit_subset_table(entries, key, fmt, out);
}

void cmd_rho(const std::string& fa, const std::string& fb, OutputFormat fmt, std::ostream& out) {
    ratio::RatioReport report =
        ratio::rho_limit(ratio::CountingFormula::parse(fa), ratio::CountingFormula::parse(fb));
    for (const auto& [n, value] : report.samples) {
        switch (fmt) {
            case OutputFormat::Plain: out << n.str() << '\t' << to_string(value) << '\n'; break;
            case OutputFormat::Csv:
                out << n.str() << ',' << numerator(value).str() << ',' << denominator(value).str()
                    << '\n';
                break;
            case OutputFormat::Record:
                out << "sample[" << n.str() << "]=" << to_string(value) << '\n';
                break;
        }
    }
    std::string kind = ratio::to_string(report.kind);
    switch (fmt) {
        case OutputFormat::Plain:
            out << "classification\t" << kind;
            if (report.limit) out << ' ' << to_string(*report.limit);
            out << '\n';
            break;
        case OutputFormat::Csv:
            out << "classification," << kind;
            if (report.limit) out << ',' << to_string(*report.limit);
            out << '\n';
            break;
        case OutputFormat::Record:
            out << "kind=" << kind << '\n';
            if (report.limit) out << "limit=" << to_string(*report.limit) << '\n';
            out << "method=" << (report.method == ratio::RatioMethod::Symbolic ? "symbolic" : "numeric")
                << '\n';
            if (report.tolerance) out << "tolerance=" << to_string(*report.tolerance) << '\n';
            break;
    }
}

void cmd_chain(const std::string& action, const std::string& text, OutputFormat fmt,
               std::ostream& out) {
    chains::Chain c = chains::parse(text);
    if (action == "parse") {
        switch (fmt) {
            case OutputFormat::Plain:
            case OutputFormat::Csv: out << chains::render(c) << '\n'; break;
            case OutputFormat::Record: out << "chain=" << chains::render(c) << '\n'; break;
        }
        return;
    }
    if (action != "classify" && action != "audit")
        throw std::invalid_argument("chain action must be parse, classify or audit");

    chains::AuditReport report = chains::audit(c);
    const chains::Verdict& v = report.verdict;
    std::vector<std::string> flags;
    for (const chains::Flag& f : v.flagged) flags.push_back(to_string(f.statement));
    std::string flag_sep = fmt == OutputFormat::Csv ? " " : ",";
    std::string flag_cell = flags.empty() ? "-" : join(flags, flag_sep);

    switch (fmt) {
        case OutputFormat::Plain:
            if (action == "audit") out << "audit\t" << (report.pass ? "pass" : "fail") << '\n';
            out << "kind\t" << to_string(v.kind) << '\n';
            out << "flags\t" << flag_cell << '\n';
            for (const std::string& w : v.warnings) out << "warning\t" << w << '\n';
            break;
        case OutputFormat::Csv:
            if (action == "audit") out << "audit," << (report.pass ? "pass" : "fail") << '\n';
            out << "kind," << to_string(v.kind) << '\n';
            out << "flags," << flag_cell << '\n';
            for (const std::string& w : v.warnings) out << "warning," << w << '\n';
            break;
        case OutputFormat::Record:
            if (action == "audit") out << "audit=" << (report.pass ? "pass" : "fail") << '\n';
            out << "kind=" << to_string(v.kind) << '\n';
            out << "flags=" << (flags.empty() ? "" : join(flags, ",")) << '\n';
            for (const std::string& w : v.warnings) out << "warning=" << w << '\n';
            break;
    }
}

void cmd_q01(std::size_t count, unsigned binary_digits, bool has_binary, OutputFormat fmt,
             std::ostream& out) {
    std::vector<Rational> qs = realline::q01_list(count);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        std::string value = to_string(qs[i]);
        std::string bits;
        if (has_binary) bits = realline::to_binary(qs[i], binary_digits).str();
        switch (fmt) {
            case OutputFormat::Plain:
                if (has_binary) {
                    out << value << " = 0." << bits << '\n';
                } else {
                    out << value << '\n';
                }
                break;
            case OutputFormat::Csv:
                out << numerator(qs[i]).str() << ',' << denominator(qs[i]).str();
                if (has_binary) out << ',' << bits;
                out << '\n';
                break;
            case OutputFormat::Record:
                out << "q[" << i << "]=" << value << '\n';
                if (has_binary) out << "bits[" << i << "]=" << bits << '\n';
                break;
        }
    }
}

void cmd_reorder(const std::string& diag, std::size_t window, const std::string& query_list,
                 OutputFormat fmt, std::ostream& out) {
    std::vector<Rational> queries;
    std::size_t pos = 0;
    while (pos < query_list.size()) {
        std::size_t end = query_list.find(',', pos);
        if (end == std::string::npos) end = query_list.size();
        queries.push_back(parse_rational(query_list.substr(pos, end - pos)));
        pos = end + 1;
    }
    realline::ReorderReport report = realline::reorder_demo(parse_rational(diag), window, queries);
    for (const realline::Placement& p : report.placements) {
        std::string q = to_string(p.query);
        std::string row = p.row ? std::to_string(*p.row) : "excluded";
        switch (fmt) {
            case OutputFormat::Plain: out << q << '\t' << row << '\n'; break;
            case OutputFormat::Csv: out << q << ',' << row << '\n'; break;
            case OutputFormat::Record:
                if (p.row) {
                    out << "row[" << q << "]=" << *p.row << '\n';
                } else {
                    out << "excluded=" << q << '\n';
                }
                break;
        }
    }
    std::string anti_value = report.antidiagonal ? to_string(*report.antidiagonal) : "-";
    switch (fmt) {
        case OutputFormat::Plain:
            out << "antidiagonal\t" << report.antidiagonal_bits.str() << '\t' << anti_value
                << "\texcluded\n";
            break;
        case OutputFormat::Csv:
            out << "antidiagonal," << report.antidiagonal_bits.str() << ',' << anti_value
                << ",excluded\n";
            break;
        case OutputFormat::Record:
            out << "antidiag_bits=" << report.antidiagonal_bits.str() << '\n';
            out << "antidiag_value=" << anti_value << '\n';
            break;
    }
}

void cmd_nest(std::size_t steps, std::size_t pool_size, OutputFormat fmt, std::ostream& out) {
    realline::NestedRun run = realline::nested_intervals(realline::q01_list(pool_size),
                                                         {Rational(0), Rational(1)}, steps);
    for (std::size_t v = 0; v < run.intervals.size(); ++v) {
        const realline::Interval& iv = run.intervals[v];
        switch (fmt) {
            case OutputFormat::Plain:
                out << v << '\t' << to_string(iv.lo) << '\t' << to_string(iv.hi) << '\n';
                break;
            case OutputFormat::Csv:
                out << v << ',' << numerator(iv.lo).str() << ',' << denominator(iv.lo).str() << ','
                    << numerator(iv.hi).str() << ',' << denominator(iv.hi).str() << '\n';
                break;
            case OutputFormat::Record:
                out << "interval[" << v << "]=" << to_string(iv.lo) << ".." << to_string(iv.hi)
                    << '\n';
                break;
        }
    }
    if (run.exhausted && fmt == OutputFormat::Plain) out << "status\texhausted\n";
    if (fmt == OutputFormat::Record) out << "exhausted=" << (run.exhausted ? "true" : "false") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite enumeration lab"};
    app.name("enumlab");
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "record"}));

    std::string dc_family;
    unsigned dc_kmax = 0;
    auto* dc = app.add_subcommand("dc", "diagonal-cover table for a string family");
    dc->add_option("--family", dc_family, "full, s2 or sq1")->required();
    dc->add_option("--kmax", dc_kmax, "largest k")->required()->check(CLI::PositiveNumber);

    std::string rank_elems;
    auto* rank = app.add_subcommand("rank", "rank a subset to i:jprime");
    rank->add_option("elements", rank_elems, "comma-separated ascending naturals")->required();

    std::string unrank_pair;
    auto* unrank = app.add_subcommand("unrank", "invert a rank pair");
    unrank->add_option("pair", unrank_pair, "i:jprime")->required();

    std::uint64_t enum_count = 0;
    auto* enumerate = app.add_subcommand("enumerate", "global subset enumeration prefix");
    enumerate->add_option("--count", enum_count, "entries to list")->required();

    unsigned ps_proof = 0, ps_i = 0, ps_m = 0, ps_k = 0;
    auto* ps = app.add_subcommand("powerset", "finite power-set constructions");
    ps->add_option("--proof", ps_proof, "1 (recursion), 2 (cartesian), 3 (exponential)")->required();
    auto* ps_i_opt = ps->add_option("--i", ps_i, "cardinality (proof 1) or universe size (proof 3)");
    auto* ps_m_opt = ps->add_option("--m", ps_m, "universe size (proof 2)");
    auto* ps_k_opt = ps->add_option("--k", ps_k, "greatest element (proof 1) or max cardinality (proof 2)");

    std::string rho_a, rho_b;
    auto* rho = app.add_subcommand("rho", "relative cardinality of two counting formulas");
    rho->add_option("--a", rho_a, "phi_A keyword, e.g. floor:n/2")->required();
    rho->add_option("--b", rho_b, "phi_B keyword, e.g. floor:n/3")->required();

    std::string chain_action, chain_text;
    auto* chain = app.add_subcommand("chain", "parse or judge a reductio chain");
    chain->add_option("action", chain_action, "parse, classify or audit")
        ->required()
        ->check(CLI::IsMember({"parse", "classify", "audit"}));
    chain->add_option("text", chain_text, "chain text, e.g. \"~P <=> Q1 => P\"")->required();

    std::size_t q01_count = 0;
    unsigned q01_digits = 0;
    auto* q01 = app.add_subcommand("q01", "unit-interval rational enumeration");
    q01->add_option("--count", q01_count, "entries to list")->required();
    auto* q01_bin = q01->add_option("--binary", q01_digits, "also print this many expansion digits");

    std::string re_diag, re_queries;
    std::size_t re_window = 0;
    auto* reorder = app.add_subcommand("reorder", "reordering-exclusion demonstration");
    reorder->add_option("--diag", re_diag, "diagonal rational, e.g. 1/3")->required();
    reorder->add_option("--window", re_window, "rows available for placement")
        ->required()
        ->check(CLI::PositiveNumber);
    reorder->add_option("--queries", re_queries, "comma-separated rationals")->required();

    std::size_t nest_steps = 0, nest_pool = 10000;
    auto* nest = app.add_subcommand("nest", "nested-interval run over the q01 enumeration");
    nest->add_option("--steps", nest_steps, "interval-halving steps")->required();
    nest->add_option("--pool", nest_pool, "q01 enumeration length");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << app.help();
        return 2;
    }

    OutputFormat fmt = format == "csv"   ? OutputFormat::Csv
                       : format == "record" ? OutputFormat::Record
                                            : OutputFormat::Plain;
    try {
        if (dc->parsed()) cmd_dc(dc_family, dc_kmax, fmt, out);
        if (rank->parsed()) cmd_rank(rank_elems, fmt, out);
        if (unrank->parsed()) cmd_unrank(unrank_pair, fmt, out);
        if (enumerate->parsed())
            emit_subset_table(subsets::enumerate_subsets(enum_count), "subset", fmt, out);
        if (ps->parsed())
            cmd_powerset(ps_proof, ps_i, ps_m, ps_k, !ps_i_opt->empty(), !ps_m_opt->empty(),
                         !ps_k_opt->empty(), fmt, out);
        if (rho->parsed()) cmd_rho(rho_a, rho_b, fmt, out);
        if (chain->parsed()) cmd_chain(chain_action, chain_text, fmt, out);
        if (q01->parsed()) cmd_q01(q01_count, q01_digits, !q01_bin->empty(), fmt, out);
        if (reorder->parsed()) cmd_reorder(re_diag, re_window, re_queries, fmt, out);
        if (nest->parsed()) cmd_nest(nest_steps, nest_pool, fmt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace enumlab::cli
