#include "cli.hpp"

#include "isotwist/errors.hpp"
#include "isotwist/families.hpp"
#include "isotwist/graphs.hpp"
#include "isotwist/localdata.hpp"
#include "isotwist/oracle.hpp"
#include "isotwist/weierstrass.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace isotwist::cli {

using nlohmann::json;

namespace {

// ---- value encoders ----

json sig_json(const Signature& s) { return {{"c4", s.c4().str()}, {"c6", s.c6().str()}, {"delta", s.delta().str()}}; }

json rats_json(const std::vector<Rat>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

json ainvs_json(const AInvariants& a) { return rats_json({a.a1, a.a2, a.a3, a.a4, a.a6}); }

json psig_json(const PSignature& s) { return {s.vc4.str(), s.vc6.str(), s.vdelta.str()}; }

std::string real_str(const Real& x) { return x.str(30, std::ios_base::scientific); }

json param_json(const GraphParam& t) { return t ? json(t->str()) : json(nullptr); }

// ---- argument helpers ----

struct CurveSpec {
    std::string ainvs;
    std::string sig;

    void add(CLI::App* sub) {
        auto* a = sub->add_option("--ainvs", ainvs, "a-invariants a1,a2,a3,a4,a6");
        auto* s = sub->add_option("--sig", sig, "signature c4,c6,delta");
        a->excludes(s);
    }

    Signature get() const {
        if (!ainvs.empty()) return signature_of(parse_ainvariants(ainvs));
        if (!sig.empty()) return Signature::parse(sig);
        throw InputError("one of --ainvs or --sig is required");
    }
};

mpz_class parse_d(const std::string& text) {
    const Rat r = Rat::parse(text);
    if (!r.is_integer()) throw InputError("d=" + text + " is not an integer");
    const mpz_class d = r.num();
    if (d == 0 || !is_squarefree(d)) throw InputError("d=" + d.get_str() + " is not square-free");
    return d;
}

GraphParam parse_t(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return Rat::parse(text);
}

long parse_prime(const std::string& text) {
    const Rat r = Rat::parse(text);
    if (!r.is_integer() || !r.num().fits_slong_p() || r.num() < 2 || !is_prime(r.num())) {
        throw InputError(text + " is not a prime");
    }
    return r.num().get_si();
}

long parse_bound(const std::string& text) {
    const Rat r = Rat::parse(text);
    if (!r.is_integer() || r.sign() <= 0 || !r.num().fits_slong_p()) {
        throw InputError("bound " + text + " is not a positive integer");
    }
    return r.num().get_si();
}

unsigned default_bits() {
    const char* env = std::getenv("ISOTWIST_BITS");
    if (env == nullptr || *env == '\0') return kDefaultBits;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v < 32 || v > 8192) {
        throw InputError(std::string("ISOTWIST_BITS=") + env + " is not an integer in [32, 8192]");
    }
    return static_cast<unsigned>(v);
}

// ---- subcommands ----

json do_classify(const Signature& s, long p, const std::string& d_text) {
    const auto c = classify(s, p);
    json conditions = json::object();
    for (const auto& [label, value] : c.conditions) conditions[label] = value;
    json out{{"p", p},
             {"u_p", c.u_p.str()},
             {"minimal_psig", psig_json(c.minimal_psig)},
             {"kodaira", c.kodaira.str()},
             {"row", c.row},
             {"conditions", conditions}};
    if (!d_text.empty()) {
        const mpz_class d = parse_d(d_text);
        out["d"] = d.get_str();
        out["pal_u"] = pal_u(c, transform(s, c.u_p), d).str();
    }
    return out;
}

json do_minimal(const Signature& s) {
    const auto [m, u] = global_minimal(s);
    return {{"signature", sig_json(s)}, {"u", u.str()}, {"minimal", sig_json(m)}, {"j", j_invariant(s).str()}};
}

json do_twist(const Signature& s, const std::string& d_text) {
    const mpz_class d = parse_d(d_text);
    const Signature m = global_minimal(s).first;
    const Signature twisted = twist_sig(m, d);
    const Rat scale = twist_scale(m, d);
    return {{"d", d.get_str()},
            {"minimal", sig_json(m)},
            {"twisted", sig_json(twisted)},
            {"u", scale.str()},
            {"twisted_minimal", sig_json(transform(twisted, scale))}};
}

json do_faltings(const GraphType& g, const GraphParam& t, const mpz_class& d) {
    const auto r = faltings_by_theorem(g, t, d);
    const auto u = u_vectors(g, t, d);
    return {{"type", g.tag()},
            {"t", param_json(t)},
            {"d", d.get_str()},
            {"vertex", r.vertex},
            {"branch", r.t_branch},
            {"d_condition", r.d_condition},
            {"probability", r.probability.str()},
            {"vertices", graph_structure(g).vertices},
            {"uE", rats_json(u.uE)},
            {"uEd", rats_json(u.uEd)},
            {"volumes", rats_json(volume_vector(g))},
            {"volume_argmax", faltings_by_volumes(g, t, d)}};
}

json do_prob(const GraphType& g, const GraphParam& t) {
    json rows = json::array();
    for (const auto& r : prob_table(g, t)) {
        rows.push_back({{"vertex", r.vertex},
                        {"branch", r.t_branch},
                        {"d_condition", r.d_condition},
                        {"probability", r.probability.str()}});
    }
    return {{"type", g.tag()}, {"t", param_json(t)}, {"branches", rows}};
}

json do_family_l39(const Rat& t) {
    const auto s = l39_signatures(t);
    const int index[3] = {1, 3, 9};
    json members = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        members.push_back({{"name", "E_" + std::to_string(index[i])},
                           {"signature", sig_json(s[i])},
                           {"j", l39_j(index[i], t).str()}});
    }
    return {{"family", "L3_9"}, {"t", t.str()}, {"fricke_t", fricke_w9(t).str()}, {"members", members}};
}

json do_family_l211(char variant) {
    const L211Class cls = l211_class(variant);
    json curves = json::array();
    for (const auto& c : cls.curves) {
        curves.push_back({{"name", c.name},
                          {"label", c.label},
                          {"ainvs", ainvs_json(c.model)},
                          {"signature", sig_json(c.signature)},
                          {"j", c.j.str()}});
    }
    return {{"family", "L2_11"}, {"variant", std::string(1, variant)}, {"curves", curves}};
}

json do_verify(const GraphType& g, const GraphParam& t, const mpz_class& d, unsigned bits, char variant) {
    const auto r = verify_class(g, t, d, bits, variant);
    json vertices = json::array();
    for (const auto& v : r.vertices) {
        vertices.push_back({{"label", v.label},
                            {"twisted", sig_json(v.twisted)},
                            {"neron_volume", real_str(v.neron_volume)},
                            {"faltings_height", real_str(v.faltings_height)}});
    }
    json out{{"type", g.tag()},
             {"t", param_json(t)},
             {"d", d.get_str()},
             {"bits", bits},
             {"vertices", vertices},
             {"argmin", r.argmin},
             {"theorem_vertex", r.theorem_vertex},
             {"match", r.match},
             {"margin", real_str(r.margin)},
             {"conclusive", r.conclusive}};
    if (g.genus_ge_1()) out["variant"] = std::string(1, variant);
    return out;
}

json do_density(long p, long bound) {
    const auto r = squarefree_density(p, bound);
    return {{"p", p},
            {"bound", r.bound},
            {"squarefree", r.squarefree},
            {"divisible", r.divisible},
            {"fraction_divisible", r.fraction_divisible},
            {"expected_fraction", probability_of_branch(p, true).str()},
            {"density", r.density},
            {"expected_density", 6 / (M_PI * M_PI)}};
}

json do_empirical(const GraphType& g, const GraphParam& t, long bound) {
    std::map<std::string, Rat> printed;
    for (const auto& row : prob_table(g, t)) printed[row.vertex] += row.probability;
    const auto r = empirical_prob(g, t, bound);
    json vertices = json::array();
    for (const auto& [vertex, prob] : printed) {
        const auto count = r.counts.count(vertex) ? r.counts.at(vertex) : 0L;
        vertices.push_back({{"vertex", vertex},
                            {"count", count},
                            {"frequency", r.samples ? static_cast<double>(count) / r.samples : 0.0},
                            {"probability", prob.str()}});
    }
    return {{"type", g.tag()}, {"t", param_json(t)}, {"bound", bound}, {"samples", r.samples}, {"vertices", vertices}};
}

json error_body(const std::string& command, const std::string& kind, const std::string& message) {
    return {{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
}

// ---- pretty printer ----

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool flat(const json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& x : v) {
        if (x.is_structured()) return false;
    }
    return true;
}

void pretty(const json& v, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        std::size_t width = 0;
        for (const auto& [k, x] : v.items()) width = std::max(width, k.size());
        for (const auto& [k, x] : v.items()) {
            out << pad << k;
            if (flat(x)) {
                out << std::string(width - k.size() + 2, ' ');
                if (x.is_array()) {
                    out << '(';
                    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar(x[i]);
                    out << ")\n";
                } else {
                    out << scalar(x) << '\n';
                }
            } else {
                out << '\n';
                pretty(x, indent + 2, out);
            }
        }
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            out << pad << '[' << i << "]\n";
            pretty(v[i], indent + 2, out);
        }
    } else {
        out << pad << scalar(v) << '\n';
    }
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Local reduction data, twist scales and Faltings curves of rational isogeny classes",
                 "isotwist-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty_flag = false;
    app.add_flag("--pretty", pretty_flag, "indented key/value output");
    app.add_flag("--json", "JSON output (default)");

    CurveSpec curve;
    std::string p_text, d_text, t_text, type_text, bits_text, bound_text, variant_text = "a";
    std::string name;

    auto* classify_cmd = app.add_subcommand("classify", "Kodaira symbol and minimal scale at one prime");
    curve.add(classify_cmd);
    classify_cmd->add_option("--p", p_text, "prime")->required();
    classify_cmd->add_option("--d", d_text, "square-free twist for the Pal value");

    auto* minimal_cmd = app.add_subcommand("minimal", "global minimal signature");
    curve.add(minimal_cmd);

    auto* twist_cmd = app.add_subcommand("twist", "twist of the minimal model and its scale");
    curve.add(twist_cmd);
    twist_cmd->add_option("--d", d_text, "square-free d")->required();

    auto* faltings_cmd = app.add_subcommand("faltings", "Faltings vertex of a twisted isogeny graph");
    auto* prob_cmd = app.add_subcommand("prob", "probability column for one parameter");
    auto* verify_cmd = app.add_subcommand("verify", "numeric height check of the Faltings vertex");
    auto* empirical_cmd = app.add_subcommand("empirical", "sieved frequencies of the Faltings vertex");
    for (auto* sub : {faltings_cmd, prob_cmd, verify_cmd, empirical_cmd}) {
        sub->add_option("--type", type_text, "type tag such as L3_9, L2_11, R4_10, T8")->required();
        sub->add_option("--t", t_text, "hauptmodul value (genus 0 types)");
    }
    for (auto* sub : {faltings_cmd, verify_cmd}) sub->add_option("--d", d_text, "square-free d")->required();
    verify_cmd->add_option("--bits", bits_text, "working precision (default $ISOTWIST_BITS or 128)");
    verify_cmd->add_option("--variant", variant_text, "L2_11 class, a or b");
    empirical_cmd->add_option("--n", bound_text, "bound on |d|")->required();

    auto* family_cmd = app.add_subcommand("family", "parametrized family data");
    family_cmd->require_subcommand(1);
    auto* l39_cmd = family_cmd->add_subcommand("l39", "the L3(9) chain at t");
    l39_cmd->add_option("--t", t_text, "hauptmodul value")->required();
    auto* l211_cmd = family_cmd->add_subcommand("l211", "the L2(11) classes");
    l211_cmd->add_option("--variant", variant_text, "a or b");

    auto* density_cmd = app.add_subcommand("density", "square-free density and divisibility by p");
    density_cmd->add_option("--p", p_text, "prime")->required();
    density_cmd->add_option("--n", bound_text, "sieve bound")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream text, errors;
        const int code = app.exit(e, text, errors);
        Outcome o;
        if (code == 0) {
            o.text = text.str();
            return o;
        }
        o.exit_code = kExitInput;
        o.response = error_body(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name(),
                                "usage", e.what());
        return o;
    }

    name = app.get_subcommands().front()->get_name();
    if (name == "family") name += " " + family_cmd->get_subcommands().front()->get_name();

    Outcome o;
    try {
        auto variant = [&]() {
            if (variant_text != "a" && variant_text != "b") throw InputError("variant must be a or b");
            return variant_text[0];
        };
        json body;
        if (classify_cmd->parsed()) {
            body = do_classify(curve.get(), parse_prime(p_text), d_text);
        } else if (minimal_cmd->parsed()) {
            body = do_minimal(curve.get());
        } else if (twist_cmd->parsed()) {
            body = do_twist(curve.get(), d_text);
        } else if (faltings_cmd->parsed()) {
            body = do_faltings(GraphType::parse(type_text), parse_t(t_text), parse_d(d_text));
        } else if (prob_cmd->parsed()) {
            body = do_prob(GraphType::parse(type_text), parse_t(t_text));
        } else if (verify_cmd->parsed()) {
            const unsigned bits = bits_text.empty() ? default_bits() : static_cast<unsigned>(parse_bound(bits_text));
            body = do_verify(GraphType::parse(type_text), parse_t(t_text), parse_d(d_text), bits, variant());
        } else if (empirical_cmd->parsed()) {
            body = do_empirical(GraphType::parse(type_text), parse_t(t_text), parse_bound(bound_text));
        } else if (l39_cmd->parsed()) {
            body = do_family_l39(Rat::parse(t_text));
        } else if (l211_cmd->parsed()) {
            body = do_family_l211(variant());
        } else if (density_cmd->parsed()) {
            body = do_density(parse_prime(p_text), parse_bound(bound_text));
        }
        o.response = json{{"schema_version", kSchemaVersion}, {"command", name}};
        o.response.update(body);
        o.pretty = pretty_flag;
    } catch (const InputError& e) {
        o.exit_code = kExitInput;
        o.response = error_body(name, "input", e.what());
    } catch (const InternalError& e) {
        o.exit_code = kExitInternal;
        o.response = error_body(name, "internal", e.what());
    }
    return o;
}

void render(const json& response, bool pretty_output, std::ostream& out) {
    if (pretty_output) {
        pretty(response, 0, out);
    } else {
        out << response.dump() << '\n';
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const Outcome o = run(args);
    if (!o.text.empty()) {
        out << o.text;
        return o.exit_code;
    }
    render(o.response, o.pretty, out);
    if (o.exit_code != kExitOk) err << "error: " << o.response["error"]["message"].get<std::string>() << '\n';
    return o.exit_code;
}

}  // namespace isotwist::cli
