#include "cqg/cli.hpp"

#include "cqg/plancherel.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cqg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string algebra = "A1";
    std::string mu, beta, gamma, max_weight, word, nu, hs = "1e-2,5e-3,2.5e-3", r;
    int i = 0, j = 0, k = 0, l = 0;
    unsigned precision = 50;
    std::uint64_t seed = 1;
    int budget = 120;
    bool no_tensor = false, hopf = false;
};

// the fields that determine a command's output (jobs, format and paths do not)
Json config_json(const std::string& cmd, const Config& c) {
    Json j;
    j["algebra"] = c.algebra;
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) j[key] = v;
    };
    put("mu", c.mu);
    put("beta", c.beta);
    put("gamma", c.gamma);
    put("max_weight", c.max_weight);
    if (cmd == "haar") j["word"] = c.word;
    if (cmd == "character") j["indices"] = {c.i, c.j, c.k, c.l};
    if (cmd == "classical-limit") {
        j["nu"] = c.nu;
        j["h"] = c.hs;
    }
    if (cmd == "verify-invlemma") put("r", c.r);
    if (cmd == "verify-tau-tensor") j["budget"] = c.budget;
    if (cmd == "verify-tau-tensor" || cmd == "classical-limit") j["precision"] = c.precision;
    if (cmd == "verify-tau-tensor") j["seed"] = c.seed;
    if (cmd == "verify-plancherel") {
        j["tensor"] = !c.no_tensor;
        j["hopf"] = c.hopf;
    }
    return j;
}

Config config_from_json(const Json& j) {
    Config c;
    auto get = [&](const char* key, std::string& v) {
        if (j.contains(key)) v = j.at(key).get<std::string>();
    };
    get("algebra", c.algebra);
    get("mu", c.mu);
    get("beta", c.beta);
    get("gamma", c.gamma);
    get("max_weight", c.max_weight);
    get("word", c.word);
    get("nu", c.nu);
    get("h", c.hs);
    get("r", c.r);
    if (j.contains("indices")) {
        const auto& v = j.at("indices");
        c.i = v.at(0);
        c.j = v.at(1);
        c.k = v.at(2);
        c.l = v.at(3);
    }
    if (j.contains("budget")) c.budget = j.at("budget");
    if (j.contains("precision")) c.precision = j.at("precision");
    if (j.contains("seed")) c.seed = j.at("seed");
    if (j.contains("tensor")) c.no_tensor = !j.at("tensor").get<bool>();
    if (j.contains("hopf")) c.hopf = j.at("hopf");
    return c;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '(' && ch != ')') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// integer fundamental coordinates "1,0"; in rank 1 also the half-integer spin "3/2"
Weight parse_weight(const std::string& text, const RootDatum& rd) {
    const auto parts = split(text, ',');
    if (static_cast<int>(parts.size()) != rd.rank())
        throw UsageError("weight '" + text + "' needs " + std::to_string(rd.rank()) + " coordinates");
    Weight w(static_cast<std::size_t>(rd.rank()));
    for (int i = 0; i < rd.rank(); ++i) {
        const std::string& p = parts[i];
        try {
            std::size_t used = 0;
            if (p.find('/') != std::string::npos) {
                if (rd.rank() != 1 || rd.a(0, 0) != 2) throw UsageError("half-integer weights are only accepted for A1");
                Rational r(p);
                r.canonicalize();
                const Rational two = 2 * r;
                if (two.get_den() != 1) throw UsageError("'" + p + "' is not a half-integer");
                w[i] = two.get_num().get_si();
            } else {
                w[i] = std::stol(p, &used);
                if (used != p.size()) throw UsageError("bad weight coordinate '" + p + "'");
            }
        } catch (const std::invalid_argument& e) {
            if (dynamic_cast<const UsageError*>(&e)) throw;
            throw UsageError("bad weight coordinate '" + p + "'");
        }
    }
    return w;
}

Weight dominant(const std::string& text, const RootDatum& rd, const char* what) {
    if (text.empty()) throw UsageError(std::string("--") + what + " is required");
    Weight w = parse_weight(text, rd);
    for (int i = 0; i < rd.rank(); ++i)
        if (w[i] < 0) throw UsageError(std::string("--") + what + " must be dominant");
    return w;
}

std::vector<Real> parse_reals(const std::string& text) {
    std::vector<Real> out;
    for (const auto& p : split(text, ',')) {
        if (p.empty()) throw UsageError("empty number in '" + text + "'");
        try {
            out.emplace_back(p);
        } catch (const std::exception&) {
            throw UsageError("bad number '" + p + "'");
        }
    }
    return out;
}

std::string real_str(const Real& x, int digits = 20) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

// dominant weights bounded coordinatewise by `bound`
std::vector<Weight> dominant_box(const Weight& bound) {
    std::vector<Weight> out;
    Weight w(bound.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == bound.size()) {
            out.push_back(w);
            return;
        }
        for (long c = 0; c <= bound[i]; ++c) {
            w[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Json weight_json(const Weight& w) {
    Json j = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i) j.push_back(w[i]);
    return j;
}

Json scalar_json(const Scalar& s, int L) { return {{"value", s.str()}, {"q", s.pretty(L)}}; }

Json symbol_json(const DoubleSym& f) {
    return {{"beta", weight_json(f.beta)}, {"i", f.i},   {"j", f.j},           {"gamma", weight_json(f.gamma)},
            {"k", f.k},                    {"l", f.l},   {"label", f.str()}};
}

CoeffElem parse_letter(OKq& o, const std::string& token) {
    std::string t = token;
    int power = 0;
    auto strip = [&](const std::string& head, int p) {
        if (t.rfind(head, 0) == 0 && t.back() == ')') {
            t = t.substr(head.size(), t.size() - head.size() - 1);
            power = p;
            return true;
        }
        return false;
    };
    strip("Sinv(", -1) || strip("S(", 1);
    if (t.size() < 4 || t.rfind("u[", 0) != 0 || t.back() != ']') throw UsageError("bad coefficient symbol '" + token + "'");
    const std::string body = t.substr(2, t.size() - 3);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw UsageError("bad coefficient symbol '" + token + "'");
    const Weight nu = dominant(body.substr(0, semi), o.rd(), "word");
    const auto idx = split(body.substr(semi + 1), ',');
    if (idx.size() != 2) throw UsageError("bad coefficient symbol '" + token + "'");
    int a = 0, b = 0;
    try {
        a = std::stoi(idx[0]);
        b = std::stoi(idx[1]);
    } catch (const std::exception&) {
        throw UsageError("bad coefficient indices in '" + token + "'");
    }
    const CoeffElem u = o.coeff(nu, a, b);
    return power == 0 ? u : o.antipode(u, power);
}

struct Result {
    Json json;
    std::vector<std::vector<std::string>> csv;  // first row is the header
    std::string pretty;
    bool ok = true;
};

using Clock = std::chrono::steady_clock;

Json report_json(const PlancherelReport& r, int L, bool timing) {
    Json p;
    auto opt = [&](const std::optional<Scalar>& s) { return s ? Json(s->str()) : Json(nullptr); };
    p["closed"] = opt(r.closed);
    p["direct"] = opt(r.direct);
    p["tensor"] = opt(r.tensor);
    if (r.hopf) p["hopf"] = r.hopf->str();
    Json j;
    j["algebra"] = r.algebra;
    j["symbol"] = symbol_json(r.symbol);
    j["pipelines"] = p;
    j["expected"] = r.expected.str();
    j["expected_q"] = r.expected.pretty(L);
    j["status"] = r.pass ? "pass" : "fail";
    j["grade"] = r.grade;
    j["wall_time_ms"] = timing ? Json(r.wall_time_ms) : Json(nullptr);
    return j;
}

Result report_list(const std::vector<PlancherelReport>& reports, int L, bool timing) {
    Result res;
    Json list = Json::array();
    res.csv.push_back({"algebra", "symbol", "closed", "direct", "tensor", "hopf", "expected", "status", "grade"});
    int failed = 0;
    for (const auto& r : reports) {
        list.push_back(report_json(r, L, timing));
        auto s = [](const std::optional<Scalar>& x) { return x ? x->str() : std::string(); };
        res.csv.push_back({r.algebra, r.symbol.str(), s(r.closed), s(r.direct), s(r.tensor), s(r.hopf), r.expected.str(),
                           r.pass ? "pass" : "fail", r.grade});
        if (!r.pass) {
            ++failed;
            res.pretty += "FAIL " + r.symbol.str() + "\n";
        }
    }
    res.ok = failed == 0;
    res.json["reports"] = list;
    res.json["summary"] = {{"symbols", reports.size()}, {"failed", failed}};
    res.pretty += std::to_string(reports.size()) + " symbols, " + std::to_string(failed) + " failed\n";
    return res;
}

std::vector<Weight> sweep_weights(const Config& c, const RootDatum& rd, const std::string& single, const char* what) {
    if (!single.empty()) return {dominant(single, rd, what)};
    if (c.max_weight.empty()) throw UsageError(std::string("--max-weight or --") + what + " is required");
    return dominant_box(dominant(c.max_weight, rd, "max-weight"));
}

Result cmd_root_datum(Algebra& alg) {
    const RootDatum& rd = alg.rd();
    Result res;
    Json cartan = Json::array(), form = Json::array(), roots = Json::array();
    for (const auto& row : rd.cartan()) cartan.push_back(row);
    for (const auto& row : rd.form()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        form.push_back(r);
    }
    for (const auto& a : rd.positive_roots()) roots.push_back(weight_json(a));
    res.json = {{"label", rd.label()},
                {"rank", rd.rank()},
                {"L", rd.L()},
                {"cartan", cartan},
                {"symmetrizers", rd.symmetrizers()},
                {"form", form},
                {"positive_roots", roots},
                {"rho", weight_json(rd.rho())},
                {"weyl_order", rd.weyl_group().size()},
                {"longest_word", rd.longest_element().word}};
    res.csv = {{"label", "rank", "L", "positive_roots", "weyl_order"},
               {rd.label(), std::to_string(rd.rank()), std::to_string(rd.L()), std::to_string(roots.size()),
                std::to_string(rd.weyl_group().size())}};
    res.pretty = rd.label() + ": rank " + std::to_string(rd.rank()) + ", " + std::to_string(roots.size()) +
                 " positive roots, |W| = " + std::to_string(rd.weyl_group().size()) + ", q = v^" + std::to_string(rd.L()) +
                 "\n";
    return res;
}

Json sparse_json(const SMat& m) {
    Json out = Json::array();
    for (int c = 0; c < m.cols(); ++c)
        for (const auto& [r, x] : m.column(c)) out.push_back({r, c, x.str()});
    return out;
}

Result cmd_irrep(Algebra& alg, const Config& c) {
    const Weight mu = dominant(c.mu, alg.rd(), "mu");
    auto v = alg.irrep(mu);
    const auto failures = relation_failures(v->module);
    Result res;
    res.ok = failures.empty();
    Json weights = Json::array(), e = Json::array(), f = Json::array();
    for (const auto& w : v->module.weights) weights.push_back(weight_json(w));
    for (const auto& m : v->module.E) e.push_back(sparse_json(m));
    for (const auto& m : v->module.F) f.push_back(sparse_json(m));
    res.json = {{"highest", weight_json(mu)}, {"dim", v->dim()}, {"weights", weights}, {"E", e}, {"F", f},
                {"gram", v->module.gram ? sparse_json(*v->module.gram) : Json(nullptr)}, {"relation_failures", failures}};
    res.csv.push_back({"index", "weight"});
    for (int b = 0; b < v->dim(); ++b) res.csv.push_back({std::to_string(b), v->weight(b).str()});
    res.pretty = "V" + mu.str() + ": dim " + std::to_string(v->dim()) + ", relations " +
                 (failures.empty() ? "hold" : std::to_string(failures.size()) + " failures") + "\n";
    return res;
}

Result cmd_qdim(Algebra& alg, const Config& c) {
    const Weight mu = dominant(c.mu, alg.rd(), "mu");
    const Scalar d = alg.qdim(mu);
    Result res;
    res.json = {{"mu", weight_json(mu)}, {"qdim", scalar_json(d, alg.rd().L())}};
    res.csv = {{"mu", "qdim", "qdim_q"}, {mu.str(), d.str(), d.pretty(alg.rd().L())}};
    res.pretty = d.pretty(alg.rd().L()) + "\n";
    return res;
}

Result cmd_decompose(Algebra& alg, const Config& c) {
    const Weight b = dominant(c.beta, alg.rd(), "beta"), g = dominant(c.gamma, alg.rd(), "gamma");
    const auto dec = alg.product_decomposition(b, g);
    Result res;
    Json comps = Json::array();
    res.csv.push_back({"highest", "multiplicity", "dim"});
    long total = 0;
    for (const auto& comp : dec->components) {
        comps.push_back({{"highest", weight_json(comp.highest)}, {"multiplicity", comp.multiplicity}, {"dim", comp.dim}});
        res.csv.push_back({comp.highest.str(), std::to_string(comp.multiplicity), std::to_string(comp.dim)});
        res.pretty += "V" + comp.highest.str() + (comp.multiplicity > 1 ? "^" + std::to_string(comp.multiplicity) : "") + "\n";
        total += static_cast<long>(comp.multiplicity) * comp.dim;
    }
    const long expect = static_cast<long>(alg.irrep(b)->dim()) * alg.irrep(g)->dim();
    res.ok = total == expect;
    res.json = {{"beta", weight_json(b)}, {"gamma", weight_json(g)}, {"dim", expect}, {"components", comps}};
    return res;
}

Result cmd_haar(const std::shared_ptr<Algebra>& alg, const Config& c) {
    OKq o(alg);
    std::vector<CoeffElem> word;
    std::istringstream in(c.word);
    for (std::string tok; in >> tok;) word.push_back(parse_letter(o, tok));
    if (word.empty()) throw UsageError("--word is required");
    const Scalar h = o.haar_word(word);
    Result res;
    res.json = {{"word", c.word}, {"haar", scalar_json(h, alg->rd().L())}};
    res.csv = {{"word", "haar"}, {c.word, h.str()}};
    res.pretty = h.pretty(alg->rd().L()) + "\n";
    return res;
}

Json fourier_json(const FourierPoly& p, int L) {
    Json out = Json::array();
    for (const auto& [w, s] : p.terms()) out.push_back({{"index", weight_json(w)}, {"coeff", s.str()}, {"coeff_q", s.pretty(L)}});
    return out;
}

Result cmd_character(const std::shared_ptr<Algebra>& alg, const Config& c) {
    OKq o(alg);
    const RootDatum& rd = alg->rd();
    const DoubleSym f{dominant(c.beta, rd, "beta"), c.i, c.j, dominant(c.gamma, rd, "gamma"), c.k, c.l};
    if (c.mu.empty()) throw UsageError("--mu is required");
    const Weight mu = parse_weight(c.mu, rd);
    o.coeff(f.beta, f.i, f.j);
    o.coeff(f.gamma, f.k, f.l);
    const FourierPoly closed = twisted_character_closed(o, f, mu);
    const bool agree = closed == twisted_character_explicit(o, f, mu);
    Result res;
    res.ok = agree;
    res.json = {{"symbol", symbol_json(f)}, {"mu", weight_json(mu)}, {"terms", fourier_json(closed, rd.L())},
                {"explicit_agrees", agree}};
    res.csv.push_back({"index", "coeff"});
    for (const auto& [w, s] : closed.terms()) {
        res.csv.push_back({w.str(), s.str()});
        res.pretty += s.pretty(rd.L()) + " · e^{iν" + w.str() + "}\n";
    }
    if (closed.is_zero()) res.pretty = "0\n";
    return res;
}

Result cmd_measure(Algebra& alg, const Config& c) {
    const RootDatum& rd = alg.rd();
    if (c.mu.empty()) throw UsageError("--mu is required");
    const Weight mu = parse_weight(c.mu, rd);
    const FourierPoly d = measure_density(rd, mu);
    const Scalar mass = fourier_integrate(d);
    Result res;
    res.json = {{"mu", weight_json(mu)}, {"density", fourier_json(d, rd.L())}, {"total_mass", scalar_json(mass, rd.L())}};
    res.csv.push_back({"index", "coeff"});
    for (const auto& [w, s] : d.terms()) res.csv.push_back({w.str(), s.str()});
    res.csv.push_back({"total_mass", mass.str()});
    for (const auto& [w, s] : d.terms()) res.pretty += s.pretty(rd.L()) + " · e^{iν" + w.str() + "}\n";
    res.pretty += "total mass " + mass.pretty(rd.L()) + "\n";
    return res;
}

Result cmd_verify_plancherel(const std::shared_ptr<Algebra>& alg, const Config& c, int jobs, bool timing) {
    OKq o(alg);
    const auto betas = sweep_weights(c, alg->rd(), c.beta, "beta");
    const auto gammas = sweep_weights(c, alg->rd(), c.gamma, "gamma");
    SweepOptions opt;
    opt.with_tensor = !c.no_tensor;
    opt.with_hopf = c.hopf;
    opt.jobs = jobs;
    return report_list(verify_plancherel(o, symbols_up_to(o, betas, gammas), opt), alg->rd().L(), timing);
}

Result cmd_hopf_trace(const std::shared_ptr<Algebra>& alg, const Config& c, int jobs, bool timing) {
    OKq o(alg);
    const auto betas = sweep_weights(c, alg->rd(), c.beta, "beta");
    const auto gammas = sweep_weights(c, alg->rd(), c.gamma, "gamma");
    return report_list(hopf_trace_identity_check(o, symbols_up_to(o, betas, gammas), jobs), alg->rd().L(), timing);
}

Result cmd_verify_tau_tensor(const std::shared_ptr<Algebra>& alg, const Config& c, int jobs, bool timing) {
    OKq o(alg);
    const RootDatum& rd = alg->rd();
    const auto betas = sweep_weights(c, rd, c.beta, "beta");
    const auto gammas = sweep_weights(c, rd, c.gamma, "gamma");
    std::vector<std::pair<Weight, Weight>> pairs;
    for (const auto& g : gammas)
        for (const auto& b : betas) pairs.emplace_back(b, g);
    TauTensorOptions opt;
    opt.exact_budget = c.budget;
    opt.digits = c.precision;
    opt.seed = c.seed;
    std::vector<TauTensor> tensors(pairs.size());
    std::vector<double> ms(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t n) {
        const auto start = Clock::now();
        tensors[n] = tau_tensor(*alg, pairs[n].first, pairs[n].second, opt);
        ms[n] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    });
    Result res;
    Json list = Json::array();
    res.csv.push_back({"beta", "gamma", "grade", "block_dim", "zero", "expected_zero", "status"});
    int failed = 0;
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        const TauTensor& t = tensors[n];
        const bool expect_zero = !t.gamma.is_zero();
        const bool zero = t.is_zero(Real("1e-30"));
        bool pass = zero == expect_zero;
        // at γ = 0 the contraction must reproduce the counit
        if (!expect_zero && t.exact)
            for (const auto& f : symbols_up_to(o, {t.beta}, {t.gamma})) pass = pass && tau_from_tensor(o, t, f) == plancherel_expected(f);
        if (!pass) ++failed;
        Json j{{"beta", weight_json(t.beta)}, {"gamma", weight_json(t.gamma)}, {"grade", t.exact ? "exact" : "numeric"},
               {"block_dim", t.block.size()}, {"zero", zero}, {"expected_zero", expect_zero}};
        if (!t.exact) {
            j["q_values"] = t.q_values;
            j["max_abs"] = real_str(t.max_abs, 6);
        }
        j["status"] = pass ? "pass" : "fail";
        j["wall_time_ms"] = timing ? Json(ms[n]) : Json(nullptr);
        list.push_back(j);
        res.csv.push_back({t.beta.str(), t.gamma.str(), t.exact ? "exact" : "numeric", std::to_string(t.block.size()),
                           zero ? "true" : "false", expect_zero ? "true" : "false", pass ? "pass" : "fail"});
        res.pretty += std::string(pass ? "pass " : "FAIL ") + "β=" + t.beta.str() + " γ=" + t.gamma.str() + " " +
                      (t.exact ? "exact" : "numeric") + (zero ? " zero" : " nonzero") + "\n";
    }
    res.ok = failed == 0;
    res.json = {{"tensors", list}, {"summary", {{"pairs", pairs.size()}, {"failed", failed}}}};
    return res;
}

Result cmd_invlemma(Algebra& alg, const Config& c) {
    const RootDatum& rd = alg.rd();
    if (rd.rank() != 1 || rd.a(0, 0) != 2) throw UsageError("verify-invlemma needs --algebra A1");
    const long b2 = dominant(c.beta, rd, "beta")[0], g2 = dominant(c.gamma, rd, "gamma")[0];
    if (g2 == 0) throw UsageError("--gamma must be positive");
    std::vector<long> rs;
    if (!c.r.empty()) {
        rs.push_back(parse_weight(c.r, rd)[0]);
    } else {
        for (long r2 = -g2 + 2; r2 <= g2; r2 += 2) rs.push_back(r2);
    }
    Result res;
    Json list = Json::array();
    res.csv.push_back({"beta", "gamma", "r", "status", "detail"});
    auto half = [](long x2) { return x2 % 2 == 0 ? std::to_string(x2 / 2) : std::to_string(x2) + "/2"; };
    for (long r2 : rs) {
        InvLemmaResult out;
        try {
            out = sl2_invlemma_check(alg, b2, g2, r2);
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
        res.ok = res.ok && out.pass;
        list.push_back({{"beta", half(b2)}, {"gamma", half(g2)}, {"r", half(r2)}, {"status", out.pass ? "pass" : "fail"},
                        {"detail", out.detail}});
        res.csv.push_back({half(b2), half(g2), half(r2), out.pass ? "pass" : "fail", out.detail});
        res.pretty += std::string(out.pass ? "pass" : "FAIL") + " r=" + half(r2) + ": " + out.detail + "\n";
    }
    res.json = {{"instances", list}};
    return res;
}

Result cmd_classical(Algebra& alg, const Config& c) {
    const RootDatum& rd = alg.rd();
    if (c.mu.empty()) throw UsageError("--mu is required");
    const Weight mu = parse_weight(c.mu, rd);
    std::vector<Real> nu = c.nu.empty() ? std::vector<Real>(rd.rank(), Real(0)) : parse_reals(c.nu);
    if (static_cast<int>(nu.size()) != rd.rank()) throw UsageError("--nu needs one value per fundamental weight");
    const auto hs = parse_reals(c.hs);
    for (const auto& h : hs)
        if (!(h > 0)) throw UsageError("--h values must be positive");
    const auto rows = classical_limit_check(rd, mu, nu, hs, c.precision);
    Result res;
    Json list = Json::array();
    res.csv.push_back({"h", "ratio", "deviation", "shrink"});
    for (std::size_t n = 0; n < rows.size(); ++n) {
        const auto& r = rows[n];
        Json j{{"h", real_str(r.h, 6)}};
        std::string shrink;
        if (r.degenerate) {
            j["degenerate"] = true;
        } else {
            j["ratio"] = real_str(r.ratio);
            j["deviation"] = real_str(r.deviation, 6);
            if (n > 0 && !rows[n - 1].degenerate && r.deviation > 0) shrink = real_str(rows[n - 1].deviation / r.deviation, 6);
            j["shrink"] = shrink.empty() ? Json(nullptr) : Json(shrink);
        }
        list.push_back(j);
        res.csv.push_back({real_str(r.h, 6), r.degenerate ? "degenerate" : real_str(r.ratio), r.degenerate ? "" : real_str(r.deviation, 6),
                           shrink});
        res.pretty += "h=" + real_str(r.h, 6) +
                      (r.degenerate ? "  degenerate point" : "  ratio " + real_str(r.ratio) + "  |ratio-1| " + real_str(r.deviation, 6)) +
                      "\n";
    }
    res.json = {{"mu", weight_json(mu)}, {"rows", list}};
    return res;
}

Result dispatch(const std::string& cmd, const Config& c, int jobs, bool timing) {
    std::shared_ptr<Algebra> alg;
    try {
        alg = Algebra::create(c.algebra);
    } catch (const RootDatumError& e) {
        throw UsageError(std::string("bad --algebra: ") + e.what());
    }
    if (cmd == "root-datum") return cmd_root_datum(*alg);
    if (cmd == "irrep") return cmd_irrep(*alg, c);
    if (cmd == "qdim") return cmd_qdim(*alg, c);
    if (cmd == "decompose") return cmd_decompose(*alg, c);
    if (cmd == "haar") return cmd_haar(alg, c);
    if (cmd == "character") return cmd_character(alg, c);
    if (cmd == "measure") return cmd_measure(*alg, c);
    if (cmd == "verify-plancherel") return cmd_verify_plancherel(alg, c, jobs, timing);
    if (cmd == "verify-tau-tensor") return cmd_verify_tau_tensor(alg, c, jobs, timing);
    if (cmd == "verify-invlemma") return cmd_invlemma(*alg, c);
    if (cmd == "hopf-trace") return cmd_hopf_trace(alg, c, jobs, timing);
    if (cmd == "classical-limit") return cmd_classical(*alg, c);
    throw UsageError("unknown command " + cmd);
}

Json document(const std::string& cmd, const Config& c, const Result& r) {
    return {{"command", cmd}, {"config", config_json(cmd, c)}, {"status", r.ok ? "pass" : "fail"}, {"result", r.json}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render(const std::string& format, const Json& doc, const Result& r) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format == "csv") {
        std::string out;
        for (const auto& row : r.csv) {
            for (std::size_t n = 0; n < row.size(); ++n) out += (n ? "," : "") + csv_field(row[n]);
            out += "\n";
        }
        return out;
    }
    return r.pretty;
}

// timings differ between runs and are left out of the comparison
void strip_timing(Json& j) {
    if (j.is_object()) {
        j.erase("wall_time_ms");
        for (auto& [k, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Harmonic analysis of complex semisimple quantum groups: exact Plancherel checks", "cqg"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    std::string format = "json", out_path, check_path;
    int jobs = 1;
    bool timing = false;
    app.add_option("--algebra", c.algebra, "root system, e.g. A1, A2, B2")->capture_default_str();
    app.add_option("--format", format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--precision", c.precision, "digits for numeric paths (>= 30)")
        ->check(CLI::Range(30u, 100000u))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1, 1024))->capture_default_str();
    app.add_option("--seed", c.seed, "seed for sampled q values")->capture_default_str();
    app.add_option("--out", out_path, "write output to this file");
    app.add_option("--check", check_path, "re-run the command recorded in a JSON artifact and compare");
    app.add_flag("--timing", timing, "record wall_time_ms");

    const std::string weight_help = "weight in fundamental coordinates, e.g. 1,0; A1 also takes spins like 3/2";
    auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
    auto add_mu = [&](CLI::App* s) { s->add_option("--mu", c.mu, weight_help); };
    auto add_bg = [&](CLI::App* s) {
        s->add_option("--beta", c.beta, weight_help);
        s->add_option("--gamma", c.gamma, weight_help);
    };
    auto add_max = [&](CLI::App* s) { s->add_option("--max-weight", c.max_weight, "coordinatewise bound on β and γ"); };

    sub("root-datum", "Cartan data, roots and Weyl group");
    add_mu(sub("irrep", "build V(μ) and dump its weights and E, F matrices"));
    add_mu(sub("qdim", "quantum dimension of V(μ)"));
    add_bg(sub("decompose", "decompose V(β) ⊗ V(γ)"));
    sub("haar", "Haar state of a word of coefficients, e.g. \"u[1;0,1] S(u[1;1,0])\"")
        ->add_option("--word", c.word, "space-separated u[ν;a,b], S(u[...]) or Sinv(u[...])");
    {
        auto* s = sub("character", "closed-form twisted character of u[β;i,j] ⊗ ω[γ;k,l] on the μ series");
        add_mu(s);
        add_bg(s);
        s->add_option("--i", c.i);
        s->add_option("--j", c.j);
        s->add_option("--k", c.k);
        s->add_option("--l", c.l);
    }
    add_mu(sub("measure", "Plancherel density on the μ series and its total mass"));
    {
        auto* s = sub("verify-plancherel", "check τ(f) = ε(f) on all symbols in range");
        add_bg(s);
        add_max(s);
        s->add_flag("--no-tensor", c.no_tensor, "skip the invariant-tensor pipeline");
        s->add_flag("--hopf", c.hopf, "also run the principal series trace pipeline");
    }
    {
        auto* s = sub("verify-tau-tensor", "check that τ_{βγ} vanishes for γ ≠ 0");
        add_bg(s);
        add_max(s);
        s->add_option("--budget", c.budget, "largest weight-0 block solved exactly")->capture_default_str();
    }
    {
        auto* s = sub("verify-invlemma", "rank-one recursion between consecutive r (A1, spins)");
        add_bg(s);
        s->add_option("--r", c.r, "single r; default all admissible");
    }
    {
        auto* s = sub("hopf-trace", "alternating trace over principal series against the counit");
        add_bg(s);
        add_max(s);
    }
    {
        auto* s = sub("classical-limit", "density against its h → 0 limit at q = e^h");
        add_mu(s);
        s->add_option("--nu", c.nu, "torus point, comma separated");
        s->add_option("--h-values", c.hs, "comma-separated h values")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        if (!check_path.empty()) {
            std::ifstream in(check_path);
            if (!in) throw UsageError("cannot read " + check_path);
            Json recorded;
            try {
                recorded = Json::parse(in);
            } catch (const Json::exception& e) {
                throw UsageError(check_path + " is not JSON: " + e.what());
            }
            if (!recorded.contains("command") || recorded["command"] != cmd)
                throw UsageError(check_path + " was not produced by '" + cmd + "'");
            const Config rc = config_from_json(recorded.at("config"));
            const Result r = dispatch(cmd, rc, jobs, false);
            Json fresh = document(cmd, rc, r);
            strip_timing(fresh);
            strip_timing(recorded);
            const bool match = fresh == recorded;
            const Json report{{"check", check_path},
                              {"command", cmd},
                              {"reproduced", match},
                              {"status", match && r.ok ? "pass" : "fail"}};
            out << (format == "json" ? report.dump(2) + "\n"
                                     : std::string(match && r.ok ? "pass" : "FAIL") + ": " + check_path + "\n");
            return match && r.ok ? 0 : 1;
        }
        const Result r = dispatch(cmd, c, jobs, timing);
        const std::string text = render(format, document(cmd, c, r), r);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw UsageError("cannot write " + out_path);
            f << text;
        }
        return r.ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDominantError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExponentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cqg::cli
