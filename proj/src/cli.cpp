#include "riocalc/cli.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "riocalc/almost.hpp"
#include "riocalc/bfile.hpp"
#include "riocalc/expr.hpp"
#include "riocalc/families.hpp"
#include "riocalc/jfrac.hpp"
#include "riocalc/transforms.hpp"
#include "riocalc/verify.hpp"

#include "json.hpp"

namespace riocalc {

namespace {

using nlohmann::json;

constexpr const char* kUsage = R"(usage: riocalc <command> [options]

commands:
  show <pair> --n <size>            matrix of a Riordan pair
  mul <pair> <pair>                 group product
  inv <pair>                        group inverse
  apply <pair> <series>             fundamental-theorem action
  involution <pair> [--n <size>]    check R*R = (1, x)
  moments <family> --count <k>      moment polynomials of a named family
  hankel <seq> [--n <k>]            Hankel determinants h_0..h_k
  jfrac <seq> --depth <d>           peel a Jacobi continued fraction
  prodmat <pair> [--n <size>]       production matrix
  family <name> [--n <size>]        matrix of a named family
  oeis-check <Axxxxxx> --against <seq> --terms <k>
                                    compare against a b-file fixture
  verify-paper                      run the full reproduction suite

options:
  --json            emit JSON instead of text
  --order <N>       series truncation order (default 24)
  --fixtures <dir>  b-file directory (default: OEIS_CACHE_DIR or bundled)
  --fetch           allow fetching missing b-files from oeis.org
  --abs             compare absolute values in oeis-check
  --seq-skip <k>    drop the first k computed terms in oeis-check
  --offset <k>      skip the first k fixture values in oeis-check

pair and series expressions use {integers, x, + - * / ^, c, t, sqrt1(..)};
named families: main-theorem:m  general:a,b  k-theorem:k,m
gen-cheb:r,s,l,mu  corollary:a,b  rna
)";

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
    bool json = false;

    bool has(const std::string& name) const { return flags.count(name) != 0; }
    long get_long(const std::string& name, long fallback) const {
        auto it = flags.find(name);
        if (it == flags.end()) return fallback;
        return std::stol(it->second);
    }
    std::string get(const std::string& name, const std::string& fallback = "") const {
        auto it = flags.find(name);
        return it == flags.end() ? fallback : it->second;
    }
};

const std::map<std::string, bool> kFlagTakesValue = {
    {"--json", false}, {"--fetch", false}, {"--abs", false},
    {"--n", true},     {"--order", true},  {"--count", true},
    {"--depth", true}, {"--terms", true},  {"--against", true},
    {"--fixtures", true}, {"--seq-skip", true}, {"--offset", true},
};

Args parse_args(const std::vector<std::string>& raw) {
    Args a;
    for (size_t i = 1; i < raw.size(); ++i) {
        const std::string& s = raw[i];
        if (s.rfind("--", 0) == 0) {
            auto it = kFlagTakesValue.find(s);
            if (it == kFlagTakesValue.end()) throw Error("unknown option: " + s);
            if (it->second) {
                if (i + 1 >= raw.size()) throw Error("option " + s + " needs a value");
                a.flags[s.substr(2)] = raw[++i];
            } else {
                a.flags[s.substr(2)] = "1";
            }
        } else {
            a.positional.push_back(s);
        }
    }
    a.json = a.has("json");
    return a;
}

json series_json(const RatSeries& s) {
    json arr = json::array();
    for (int i = 0; i <= s.order(); ++i) arr.push_back(s[i].str());
    return arr;
}

json seq_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.entry(i, j).str());
        rows.push_back(row);
    }
    return json{{"n", m.size()}, {"rows", rows}};
}

json prodmat_json(const ProductionMatrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.entry(i, j).str());
        rows.push_back(row);
    }
    return json{{"n", m.size()}, {"rows", rows}};
}

void print_pair(const RiordanPair<Rational>& p, bool as_json, std::ostream& out) {
    if (as_json) {
        out << json{{"g", series_json(p.g())}, {"f", series_json(p.f())}}.dump(2) << "\n";
    } else {
        out << "g: " << p.g().str() << "\n";
        out << "f: " << p.f().str() << "\n";
    }
}

std::string seq_text(const std::vector<Rational>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out;
}

int cmd_show(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("show expects one pair expression");
    int n = static_cast<int>(a.get_long("n", 8));
    int order = static_cast<int>(a.get_long("order", std::max(kDefaultOrder, n)));
    RatPair p = eval_pair_expr(a.positional[1], order);
    RatMatrix m = p.to_matrix(n);
    out << (a.json ? matrix_json(m).dump(2) + "\n" : m.str());
    return 0;
}

int cmd_mul_inv(const Args& a, std::ostream& out, bool multiply) {
    int order = static_cast<int>(a.get_long("order", kDefaultOrder));
    if (multiply) {
        if (a.positional.size() != 3) throw Error("mul expects two pair expressions");
        RatPair p = rmul(eval_pair_expr(a.positional[1], order),
                         eval_pair_expr(a.positional[2], order));
        print_pair(p, a.json, out);
    } else {
        if (a.positional.size() != 2) throw Error("inv expects one pair expression");
        print_pair(rinv(eval_pair_expr(a.positional[1], order)), a.json, out);
    }
    return 0;
}

int cmd_apply(const Args& a, std::ostream& out) {
    if (a.positional.size() != 3) throw Error("apply expects a pair and a series");
    int order = static_cast<int>(a.get_long("order", kDefaultOrder));
    RatSeries r = apply(eval_pair_expr(a.positional[1], order),
                        eval_series_expr(a.positional[2], order));
    out << (a.json ? series_json(r).dump(2) + "\n" : r.str() + "\n");
    return 0;
}

int cmd_involution(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("involution expects one pair expression");
    int n = static_cast<int>(a.get_long("n", 16));
    int order = static_cast<int>(a.get_long("order", std::max(kDefaultOrder, n)));
    RatPair p = eval_pair_expr(a.positional[1], order);
    auto rep = involution_check(p, n);
    if (a.json) {
        json j{{"holds", rep.holds}, {"n", n}};
        if (rep.witness) {
            j["witness"] = {{"row", rep.witness->row},
                            {"col", rep.witness->col},
                            {"got", rep.witness->got.str()},
                            {"expected", rep.witness->expected.str()}};
        }
        out << j.dump(2) << "\n";
    } else if (rep.holds) {
        out << "involution: PASS (n=" << n << ")\n";
    } else {
        out << "involution: FAIL at (" << rep.witness->row << "," << rep.witness->col
            << "): got " << rep.witness->got.str() << " expected "
            << rep.witness->expected.str() << "\n";
    }
    return rep.holds ? 0 : 1;
}

int cmd_moments(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("moments expects a family name");
    int count = static_cast<int>(a.get_long("count", 8));
    int order = static_cast<int>(a.get_long("order", std::max(kDefaultOrder, count + 1)));
    auto fam = family_source(a.positional[1], order);
    auto mu = moment_polys(fam, count);
    if (a.json) {
        json arr = json::array();
        for (const auto& p : mu) arr.push_back(p.str());
        out << arr.dump(2) << "\n";
    } else {
        for (int i = 0; i < count; ++i) out << "mu_" << i << ": " << mu[i].str() << "\n";
    }
    return 0;
}

int cmd_hankel(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("hankel expects a sequence expression");
    int n = static_cast<int>(a.get_long("n", 6));
    auto seq = eval_seq_expr(a.positional[1], 2 * n + 1);
    auto h = hankel_transform(seq, n);
    out << (a.json ? seq_json(h).dump(2) + "\n" : seq_text(h) + "\n");
    return 0;
}

int cmd_jfrac(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("jfrac expects a sequence expression");
    int depth = static_cast<int>(a.get_long("depth", 4));
    auto seq = eval_seq_expr(a.positional[1], 2 * depth + 1);
    auto j = series_to_jfraction(RatSeries::from_coeffs(seq, static_cast<int>(seq.size()) - 1),
                                 depth);
    json alphas = json::array(), betas = json::array();
    for (int k = 0; k < depth; ++k) alphas.push_back(j.alpha(k).str());
    for (int k = 1; k <= depth; ++k) betas.push_back(j.beta(k).str());
    json jj{{"mu0", j.mu0().str()}, {"alphas", alphas}, {"betas", betas}, {"tail", nullptr}};
    if (a.json) {
        out << jj.dump(2) << "\n";
    } else {
        out << "mu0: " << j.mu0().str() << "\n";
        out << "alphas: " << jj["alphas"].dump() << "\n";
        out << "betas: " << jj["betas"].dump() << "\n";
    }
    return 0;
}

int cmd_prodmat(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("prodmat expects one pair expression");
    int n = static_cast<int>(a.get_long("n", 7));
    int order = static_cast<int>(a.get_long("order", std::max(kDefaultOrder, 2 * n + 2)));
    RatPair p = eval_pair_expr(a.positional[1], order);
    auto pm = production_matrix(p, n);
    out << (a.json ? prodmat_json(pm).dump(2) + "\n" : pm.str());
    return 0;
}

int cmd_family(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("family expects a family name");
    if (!is_family_name(a.positional[1])) throw Error("unknown family: " + a.positional[1]);
    int n = static_cast<int>(a.get_long("n", 8));
    int order = static_cast<int>(a.get_long("order", std::max(kDefaultOrder, n)));
    RatMatrix m = family_involution(a.positional[1], order).to_matrix(n);
    out << (a.json ? matrix_json(m).dump(2) + "\n" : m.str());
    return 0;
}

int cmd_oeis_check(const Args& a, std::ostream& out) {
    if (a.positional.size() != 2) throw Error("oeis-check expects an OEIS number");
    const std::string& anum = a.positional[1];
    if (!a.has("against")) throw Error("oeis-check needs --against <seq-expr>");
    int terms = static_cast<int>(a.get_long("terms", 10));
    int seq_skip = static_cast<int>(a.get_long("seq-skip", 0));
    int offset = static_cast<int>(a.get_long("offset", 0));
    bool use_abs = a.has("abs");

    BFile bf = oeis_load(anum, a.get("fixtures"), a.has("fetch"));
    auto vals = bf.values();
    auto seq = eval_seq_expr(a.get("against"), terms + seq_skip);

    for (int i = 0; i < terms; ++i) {
        size_t si = static_cast<size_t>(i + seq_skip);
        size_t fi = static_cast<size_t>(i + offset);
        if (si >= seq.size() || fi >= vals.size()) {
            out << "FAIL " << anum << ": not enough terms (have " << seq.size()
                << " computed, " << vals.size() << " fixture)\n";
            return 1;
        }
        Rational got = use_abs ? abs_value(seq[si]) : seq[si];
        if (!(got == vals[fi])) {
            out << "FAIL " << anum << " at term " << i << ": got " << got.str()
                << " fixture " << vals[fi].str() << "\n";
            return 1;
        }
    }
    if (a.json) {
        out << json{{"anumber", anum}, {"terms", terms}, {"pass", true}}.dump(2) << "\n";
    } else {
        out << "PASS " << anum << " (" << terms << " terms)\n";
    }
    return 0;
}

int cmd_verify_paper(const Args& a, std::ostream& out) {
    VerifyReport rep = run_verification_suite(a.get("fixtures"));
    out << render_report(rep, a.json);
    return rep.all_pass ? 0 : 1;
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Args a;
    try {
        a = parse_args(args);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    }
    if (a.positional.empty()) {
        err << kUsage;
        return 2;
    }
    const std::string& cmd = a.positional[0];
    try {
        if (cmd == "show") return cmd_show(a, out);
        if (cmd == "mul") return cmd_mul_inv(a, out, true);
        if (cmd == "inv") return cmd_mul_inv(a, out, false);
        if (cmd == "apply") return cmd_apply(a, out);
        if (cmd == "involution") return cmd_involution(a, out);
        if (cmd == "moments") return cmd_moments(a, out);
        if (cmd == "hankel") return cmd_hankel(a, out);
        if (cmd == "jfrac") return cmd_jfrac(a, out);
        if (cmd == "prodmat") return cmd_prodmat(a, out);
        if (cmd == "family") return cmd_family(a, out);
        if (cmd == "oeis-check") return cmd_oeis_check(a, out);
        if (cmd == "verify-paper") return cmd_verify_paper(a, out);
    } catch (const HankelDegenerate& e) {
        out << "FAIL: " << e.what() << "\n";
        return 1;
    } catch (const FixtureMissing& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: unknown command '" << cmd << "'\n" << kUsage;
    return 2;
}

}  // namespace riocalc
