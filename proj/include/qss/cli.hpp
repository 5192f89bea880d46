#pragma once

// Command dispatch for the `qss` tool, kept in the library so it can be driven from tests.
// Needs nlohmann json.hpp on the include path; not part of qss.hpp for that reason.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "verify.hpp"

namespace qss::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, text };

struct RunConfig {
    std::string command;
    int m = 1, n = 1, r = 0;
    std::optional<std::string> cache;  ///< kl only; falls back to $QSS_CACHE_DIR
    OutputFormat format = OutputFormat::json;
    std::string suite = "all";
    bool symbolic = false;
    int max_r = 8;
    std::optional<std::string> row, col;  ///< matrices filters, "λ|μ"
    std::optional<std::string> matrix;    ///< coset-words and rsk
    std::string basis = "theta";          ///< canonical: theta | theta-prime
};

/// Raised for bad input; maps to exit status 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Json big(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    std::ostringstream os;
    os << x;
    return os.str();
}

/// [[exponent, coefficient], ...] in increasing exponent order.
inline Json laurent(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, big(c)}));
    return out;
}

inline Json perm(const Permutation& w) {
    Json out = Json::array();
    for (int k = 1; k <= w.rank(); ++k) out.push_back(w(k));
    return out;
}

inline Json rows(const IntMatrix& a) { return a.to_rows(); }
inline Json tableau(const Tableau& t) { return t; }

inline LaurentPoly laurent_from(const Json& j) {
    std::map<int, BigInt> m;
    for (const auto& term : j) {
        const Json& c = term.at(1);
        m[term.at(0).get<int>()] = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
    }
    return LaurentPoly::from_map(m);
}

inline Permutation perm_from(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

/// Flattens one record to "key=value ..." for --format text.
inline std::string text_line(const Json& rec) {
    std::string s;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (!s.empty()) s += ' ';
        s += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    return s;
}

class Writer {
public:
    Writer(std::ostream& os, OutputFormat f) : os_(os), f_(f) {}
    void operator()(const Json& rec) {
        std::lock_guard<std::mutex> lock(mu_);
        os_ << (f_ == OutputFormat::json ? rec.dump() : text_line(rec)) << '\n';
    }

private:
    std::ostream& os_;
    OutputFormat f_;
    std::mutex mu_;
};

inline void validate_profile(const RunConfig& c) {
    if (c.m < 0 || c.n < 0) throw ValidationError("m and n must be nonnegative");
    if (c.m + c.n == 0) throw ValidationError("need m+n > 0");
    if (c.r < 0) throw ValidationError("r must be nonnegative");
}

inline void validate_cap(const RunConfig& c, int r) {
    if (r > c.max_r)
        throw ValidationError("refusing r=" + std::to_string(r) + " above the cap " + std::to_string(c.max_r) +
                              "; raise it with --max-r");
}

inline SuperMatrix parse_matrix(const RunConfig& c) {
    if (!c.matrix) throw ValidationError("--matrix is required");
    std::vector<std::vector<int>> entries;
    try {
        entries = Json::parse(*c.matrix).get<std::vector<std::vector<int>>>();
    } catch (const std::exception&) {
        throw ValidationError("--matrix must be a JSON array of integer rows");
    }
    try {
        return SuperMatrix(c.m, c.n, entries);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
}

inline BiComposition parse_weight(const std::string& text, const RunConfig& c) {
    BiComposition w;
    try {
        w = BiComposition::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
    if (w.m() != c.m || w.n() != c.n || w.total() != c.r)
        throw ValidationError("weight " + text + " is not in the (m|n,r) profile");
    return w;
}

// ---- kl -------------------------------------------------------------------

inline Json kl_record(const Permutation& w, const KLTable& table) {
    Json ps = Json::array();
    for (const auto& y : all_permutations(table.rank())) {
        const LaurentPoly P = table.P(y, w);
        if (P.is_zero()) continue;
        ps.push_back(Json{{"y", perm(y)}, {"P", laurent(P)}});
    }
    return Json{{"w", perm(w)}, {"P", ps}};
}

inline std::optional<std::filesystem::path> cache_path(const RunConfig& c, int rank) {
    if (c.cache) return std::filesystem::path(*c.cache);
    if (const char* dir = std::getenv("QSS_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir) / ("kl-" + std::to_string(rank) + ".jsonl");
    return std::nullopt;
}

/// Reads a cache file into `table`; false when the file is absent.
inline bool load_kl_cache(const std::filesystem::path& path, int rank, const KLTable& table) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("empty KL cache " + path.string());
    Json header;
    try {
        header = Json::parse(line);
    } catch (const std::exception&) {
        throw ValidationError("unreadable KL cache header in " + path.string());
    }
    if (header.value("format", 0) != 1 || header.value("rank", -1) != rank)
        throw ValidationError("KL cache " + path.string() + " does not hold rank " + std::to_string(rank));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const Json rec = Json::parse(line);
        const Permutation w = perm_from(rec.at("w"));
        // C_w = v^{-l(w)} Σ_y P_{y,w}(v²) T_y
        HeckeElement c(rank);
        for (const auto& entry : rec.at("P"))
            c.add(perm_from(entry.at("y")), laurent_from(entry.at("P")).substitute_power(2).shift(-w.length()));
        table.seed(w, std::move(c));
    }
    return true;
}

inline int run_kl(const RunConfig& c, Writer& out) {
    const int rank = c.r;
    if (rank < 1) throw ValidationError("--rank must be at least 1");
    validate_cap(c, rank);
    KLTable table(rank);
    const auto path = cache_path(c, rank);
    const bool warm = path && load_kl_cache(*path, rank, table);
    std::vector<Json> records;
    for (const auto& w : all_permutations(rank)) records.push_back(kl_record(w, table));
    if (path && !warm) {
        if (path->has_parent_path()) std::filesystem::create_directories(path->parent_path());
        std::ofstream file(*path);
        if (!file) throw ValidationError("cannot write KL cache " + path->string());
        file << Json{{"format", 1}, {"rank", rank}}.dump() << '\n';
        for (const auto& rec : records) file << rec.dump() << '\n';
    }
    for (const auto& rec : records) out(rec);
    return 0;
}

// ---- matrices, coset-words, rsk -------------------------------------------

inline Json matrix_record(const SuperMatrix& A) {
    const DoubleCosetData d = double_coset_data(A);
    return Json{{"entries", rows(A.entries())},
                {"ro", A.ro().to_string()},
                {"co", A.co().to_string()},
                {"parity", A.parity()},
                {"d", perm(d.d)},
                {"d_pm", perm(d.d_star)},
                {"d_mp", perm(d.star_d)}};
}

inline int run_matrices(const RunConfig& c, Writer& out) {
    validate_profile(c);
    validate_cap(c, c.r);
    std::optional<BiComposition> row, col;
    if (c.row) row = parse_weight(*c.row, c);
    if (c.col) col = parse_weight(*c.col, c);
    for (const auto& A : enumerate_matrices(c.m, c.n, c.r)) {
        if (row && A.ro() != *row) continue;
        if (col && A.co() != *col) continue;
        out(matrix_record(A));
    }
    return 0;
}

inline int run_coset_words(const RunConfig& c, Writer& out) {
    const SuperMatrix A = parse_matrix(c);
    out(Json{{"entries", rows(A.entries())},
             {"ro", A.ro().to_string()},
             {"co", A.co().to_string()},
             {"w_minus", perm(coset_words(A.entries(), WordVariant::minus))},
             {"w_plus", perm(coset_words(A.entries(), WordVariant::plus))},
             {"w_plus_minus", perm(signed_words(A, SignedVariant::pm))},
             {"w_minus_plus", perm(signed_words(A, SignedVariant::mp))}});
    return 0;
}

inline int run_rsk(const RunConfig& c, Writer& out) {
    const SuperMatrix A = parse_matrix(c);
    const SuperTableauPair p = rsk_super(A);
    out(Json{{"nu", p.nu.parts()}, {"S", tableau(p.S)}, {"T", tableau(p.T)}});
    return 0;
}

// ---- canonical, cells -----------------------------------------------------

inline int run_canonical(const RunConfig& c, Writer& out) {
    validate_profile(c);
    validate_cap(c, c.r);
    if (c.basis != "theta" && c.basis != "theta-prime") throw ValidationError("--basis must be theta or theta-prime");
    const SchurAlgebra S(c.m, c.n, c.r);
    for (std::size_t i = 0; i < S.basis().size(); ++i) {
        const SuperMatrix& D = S.basis()[i];
        const SchurElement x = c.basis == "theta" ? S.theta(D) : S.theta_prime(D);
        Json coeffs = Json::array();
        for (const auto& [C, a] : x.terms())
            coeffs.push_back(Json{{"index", S.index(C)}, {"entries", rows(C.entries())}, {"coefficient", laurent(a)}});
        out(Json{{"index", i}, {"entries", rows(D.entries())}, {"basis", c.basis}, {"phi", coeffs}});
    }
    return 0;
}

inline Json classes(const std::vector<int>& labels) {
    std::map<int, std::vector<std::size_t>> by;
    for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].push_back(i);
    Json out = Json::array();
    for (const auto& [label, members] : by) out.push_back(members);
    return out;
}

inline int run_cells(const RunConfig& c, Writer& out) {
    validate_profile(c);
    validate_cap(c, c.r);
    const CellPartition p = cell_partition(c.m, c.n, c.r, CellMethod::definition);
    out(Json{{"left", classes(p.left)}, {"right", classes(p.right)}, {"two_sided", classes(p.two_sided)}});
    return 0;
}

// ---- verify ---------------------------------------------------------------

inline int run_verify(const RunConfig& c, Writer& out) {
    validate_profile(c);
    validate_cap(c, c.r);
    if (c.r < 1) throw ValidationError("verify needs r >= 1");
    const auto& names = verify_suites();
    if (c.suite != "all" && std::find(names.begin(), names.end(), c.suite) == names.end())
        throw ValidationError("unknown suite " + c.suite);
    const auto results = verify(c.suite, c.m, c.n, c.r, c.symbolic);
    bool all = true;
    for (const auto& res : results) {
        Json rec{{"suite", res.suite}, {"check", res.check}, {"pass", res.pass}, {"expected", res.expected},
                 {"got", res.got}};
        if (!res.counterexample.empty()) rec["counterexample"] = res.counterexample;
        out(rec);
        all = all && res.pass;
    }
    out(Json{{"suite", c.suite}, {"m", c.m}, {"n", c.n}, {"r", c.r}, {"checks", results.size()}, {"pass", all}});
    return all ? 0 : 1;
}

}  // namespace detail

/// Runs one command. Returns 0 on success, 1 on a failed verification, 2 on invalid input.
inline int dispatch(const RunConfig& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    detail::Writer writer(out, c.format);
    try {
        if (c.command == "kl") return detail::run_kl(c, writer);
        if (c.command == "matrices") return detail::run_matrices(c, writer);
        if (c.command == "coset-words") return detail::run_coset_words(c, writer);
        if (c.command == "rsk") return detail::run_rsk(c, writer);
        if (c.command == "canonical") return detail::run_canonical(c, writer);
        if (c.command == "cells") return detail::run_cells(c, writer);
        if (c.command == "verify") return detail::run_verify(c, writer);
        throw ValidationError("unknown command '" + c.command + "'");
    } catch (const ValidationError& e) {
        err << "qss: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "qss: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "qss: internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qss::cli
