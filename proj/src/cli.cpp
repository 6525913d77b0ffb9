#include "morita/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "morita/cherednik.hpp"
#include "morita/exact.hpp"
#include "morita/gwa.hpp"
#include "morita/quiver.hpp"
#include "morita/repmod.hpp"
#include "morita/roots.hpp"
#include "morita/weyl.hpp"

namespace morita {

namespace {

using Json = nlohmann::ordered_json;

struct SelfVerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json make_doc(const std::string& command) {
    Json doc;
    doc["command"] = command;
    doc["inputs"] = Json::object();
    doc["status"] = nullptr;
    doc["witness"] = nullptr;
    doc["result"] = nullptr;
    doc["diagnostics"] = Json::array();
    return doc;
}

void render_text(const Json& doc, std::ostream& out) {
    out << "command: " << doc["command"].get<std::string>() << "\n";
    for (const auto& [key, val] : doc["inputs"].items()) {
        out << "input " << key << ": ";
        if (val.is_string())
            out << val.get<std::string>();
        else
            out << val.dump();
        out << "\n";
    }
    out << "status: " << doc["status"].get<std::string>() << "\n";
    if (!doc["witness"].is_null())
        out << "witness: " << doc["witness"].get<std::string>() << "\n";
    if (!doc["result"].is_null()) {
        for (const auto& [key, val] : doc["result"].items()) {
            out << key << ": ";
            if (val.is_string())
                out << val.get<std::string>();
            else
                out << val.dump();
            out << "\n";
        }
    }
    for (const auto& d : doc["diagnostics"])
        out << "note: " << d.get<std::string>() << "\n";
}

void emit(const Json& doc, bool json_format, std::ostream& out) {
    if (json_format)
        out << doc.dump(2) << "\n";
    else
        render_text(doc, out);
}

std::string flags_to_status(bool equivalent) {
    return equivalent ? "equivalent" : "not-equivalent";
}

GwaRoots parse_roots(const std::string& text) {
    ParamVector v = parse_param_vector(text);
    return {v.begin(), v.end()};
}

struct ProductFactor {
    QuiverData quiver;
    ParamVector lambda;
};

ProductFactor parse_factor(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("factor must look like A3:1,0,0, got " + text);
    ProductFactor f{parse_quiver_name(text.substr(0, colon)),
                    parse_param_vector(text.substr(colon + 1))};
    if (f.lambda.size() != static_cast<size_t>(f.quiver.vertex_count))
        throw std::invalid_argument("factor parameter length mismatch: " + text);
    return f;
}

void check_length(const QuiverData& q, const ParamVector& lambda) {
    if (lambda.size() != static_cast<size_t>(q.vertex_count))
        throw std::invalid_argument("parameter length " + std::to_string(lambda.size()) +
                                    " does not match quiver " + q.name);
}

// ---- subcommand handlers ----

Json run_quiver_info(const std::string& quiver_name) {
    QuiverData q = parse_quiver_name(quiver_name);
    Json doc = make_doc("quiver-info");
    doc["inputs"]["quiver"] = quiver_name;
    doc["status"] = "ok";
    Json res;
    res["name"] = q.name;
    res["vertices"] = q.vertex_count;
    std::ostringstream arrows;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (a) arrows << ",";
        arrows << q.arrows[a].first << ">" << q.arrows[a].second;
    }
    res["arrows"] = arrows.str();
    res["delta"] = format_int_vector(q.delta);
    res["automorphisms"] = diagram_automorphisms(q).size();
    res["finite_roots"] = finite_roots(q).roots.size();
    doc["result"] = res;
    return doc;
}

Json run_classify(const std::string& quiver_name, const std::string& lambda_text) {
    QuiverData q = parse_quiver_name(quiver_name);
    ParamVector lambda = parse_param_vector(lambda_text);
    check_length(q, lambda);
    ParamClass pc = classify_parameter(q, lambda);
    Json doc = make_doc("classify");
    doc["inputs"]["quiver"] = quiver_name;
    doc["inputs"]["lambda"] = format_param_vector(lambda);
    doc["status"] = "ok";
    Json res;
    res["level"] = format_scalar(pc.level);
    res["commutative"] = pc.commutative;
    res["regular"] = pc.regular;
    res["generic"] = pc.generic;
    doc["result"] = res;
    return doc;
}

Json run_canon(const std::string& quiver_name, const std::string& lambda_text) {
    QuiverData q = parse_quiver_name(quiver_name);
    ParamVector lambda = parse_param_vector(lambda_text);
    check_length(q, lambda);
    Json doc = make_doc("canon");
    doc["inputs"]["quiver"] = quiver_name;
    doc["inputs"]["lambda"] = format_param_vector(lambda);
    try {
        Json res;
        if (all_real(lambda)) {
            CanonicalForm cf = canonical_form(q, lambda);
            res["canonical"] = format_param_vector(cf.canonical);
            doc["witness"] = format_word(cf.word);
            if (apply_word(q, parse_word(q, format_word(cf.word)), lambda) != cf.canonical)
                throw SelfVerificationFailure("canonical word does not reproduce the form");
        } else {
            CanonicalPair cp = canonical_form_complex(q, lambda);
            res["x0"] = format_param_vector(cp.x0);
            res["y0"] = format_param_vector(cp.y0);
            doc["witness"] = format_word(cp.word);
            ParamVector target(cp.x0.size());
            for (size_t i = 0; i < target.size(); ++i)
                target[i] = GaussianRational(cp.x0[i].re, cp.y0[i].re);
            if (apply_word(q, parse_word(q, format_word(cp.word)), lambda) != target)
                throw SelfVerificationFailure("canonical word does not reproduce the pair");
        }
        doc["status"] = "ok";
        doc["result"] = res;
    } catch (const std::domain_error& e) {
        doc["status"] = "unsupported";
        doc["diagnostics"].push_back(e.what());
    }
    return doc;
}

Json run_orbit(const std::string& quiver_name, const std::string& lambda_text,
               const std::string& lambda2_text) {
    QuiverData q = parse_quiver_name(quiver_name);
    ParamVector lambda = parse_param_vector(lambda_text);
    ParamVector lambda2 = parse_param_vector(lambda2_text);
    check_length(q, lambda);
    check_length(q, lambda2);
    Json doc = make_doc("orbit");
    doc["inputs"]["quiver"] = quiver_name;
    doc["inputs"]["lambda"] = format_param_vector(lambda);
    doc["inputs"]["lambda2"] = format_param_vector(lambda2);
    try {
        OrbitDecision d = same_orbit(q, lambda, lambda2);
        doc["status"] = flags_to_status(d.equivalent);
        if (d.equivalent) {
            std::string serialized = format_word(*d.witness);
            WeylWord reparsed = parse_word(q, serialized);
            if (apply_word(q, reparsed, lambda) != lambda2)
                throw SelfVerificationFailure("orbit witness failed re-verification");
            doc["witness"] = serialized;
        }
    } catch (const std::domain_error& e) {
        doc["status"] = "unsupported";
        doc["diagnostics"].push_back(e.what());
    }
    return doc;
}

Json run_orbit_product(const std::vector<std::string>& left_texts,
                       const std::vector<std::string>& right_texts) {
    std::vector<QuiverParam> left, right;
    Json lin = Json::array(), rin = Json::array();
    for (const auto& t : left_texts) {
        ProductFactor f = parse_factor(t);
        lin.push_back(f.quiver.name + ":" + format_param_vector(f.lambda));
        left.push_back({std::move(f.quiver), std::move(f.lambda)});
    }
    for (const auto& t : right_texts) {
        ProductFactor f = parse_factor(t);
        rin.push_back(f.quiver.name + ":" + format_param_vector(f.lambda));
        right.push_back({std::move(f.quiver), std::move(f.lambda)});
    }
    Json doc = make_doc("orbit-product");
    doc["inputs"]["left"] = lin;
    doc["inputs"]["right"] = rin;
    try {
        doc["status"] = flags_to_status(decide_product(left, right));
    } catch (const std::domain_error& e) {
        doc["status"] = "unsupported";
        doc["diagnostics"].push_back(e.what());
    }
    return doc;
}

Json run_gwa_decide(const std::string& left_text, const std::string& right_text) {
    GwaRoots left = parse_roots(left_text);
    GwaRoots right = parse_roots(right_text);
    Json doc = make_doc("gwa-decide");
    doc["inputs"]["t"] = format_param_vector({left.begin(), left.end()});
    doc["inputs"]["t2"] = format_param_vector({right.begin(), right.end()});
    GwaDecision d = gwa_decide(left, right);
    doc["status"] = flags_to_status(d.equivalent);
    if (!d.left_distinct)
        doc["diagnostics"].push_back(
            "left tuple has repeated entries; the Morita reading needs distinct roots");
    if (!d.right_distinct)
        doc["diagnostics"].push_back(
            "right tuple has repeated entries; the Morita reading needs distinct roots");
    if (d.equivalent) {
        std::string serialized = format_group_element(*d.witness);
        GwaGroupElement reparsed =
            parse_group_element(serialized, static_cast<int>(left.size()));
        if (apply_group_element(reparsed, left) != right)
            throw SelfVerificationFailure("gwa witness failed re-verification");
        doc["witness"] = serialized;
    } else if (!d.reason.empty()) {
        doc["diagnostics"].push_back(d.reason);
    }
    return doc;
}

Json run_reflect_module(const std::string& quiver_name, const std::string& lambda_text,
                        int simple_vertex, const std::string& word_text,
                        unsigned long mod_p) {
    QuiverData q = parse_quiver_name(quiver_name);
    ParamVector lambda = parse_param_vector(lambda_text);
    check_length(q, lambda);
    if (mod_p != 0 && (mod_p <= 3 || !is_prime(Integer(mod_p))))
        throw std::invalid_argument("--mod must be 0 (rationals) or a prime > 3");
    ExactField field{mod_p};
    Json doc = make_doc("reflect-module");
    doc["inputs"]["quiver"] = quiver_name;
    doc["inputs"]["lambda"] = format_param_vector(lambda);
    doc["inputs"]["simple"] = simple_vertex;
    doc["inputs"]["word"] = word_text;
    doc["inputs"]["field"] = mod_p == 0 ? "Q" : "F" + std::to_string(mod_p);
    try {
        RepModule m = simple_at(q, lambda, field, simple_vertex);
        ParamVector cur = lambda;
        Json steps = Json::array();
        steps.push_back("start dims " + format_int_vector(m.dims));
        WeylWord word = parse_word(q, word_text);
        for (const WeylLetter& letter : word) {
            if (!letter.is_reflection())
                throw std::invalid_argument("reflect-module takes reflection letters only");
            int i = letter.vertex();
            auto reflected = reflect_module(q, cur, i, m);
            if (!reflected) {
                steps.push_back("r" + std::to_string(i) +
                                " is the identity here (lambda_i = 0)");
                continue;
            }
            cur = reflected->lambda;
            m = reflected->module;
            RelationReport rel = check_relations(q, cur, m);
            steps.push_back("r" + std::to_string(i) + " -> dims " +
                            format_int_vector(m.dims) + ", relations " +
                            (rel.ok ? "ok" : "FAIL"));
            if (!rel.ok)
                throw SelfVerificationFailure("reflection broke the defining relation");
        }
        doc["status"] = "ok";
        Json res;
        res["dims"] = format_int_vector(m.dims);
        res["lambda_final"] = format_param_vector(cur);
        res["steps"] = steps;
        doc["result"] = res;
    } catch (const std::domain_error& e) {
        doc["status"] = "unsupported";
        doc["diagnostics"].push_back(e.what());
    }
    return doc;
}

Json run_cherednik(int n, const std::string& c_text, const std::string& c2_text) {
    Rational c = parse_rational(c_text);
    Rational c2 = parse_rational(c2_text);
    Json doc = make_doc("cherednik");
    doc["inputs"]["n"] = n;
    doc["inputs"]["c"] = format_rational(c);
    doc["inputs"]["cprime"] = format_rational(c2);
    CherednikDecision d = cherednik_decide(n, c, c2);
    switch (d.verdict) {
        case CherednikVerdict::Equivalent: doc["status"] = "equivalent"; break;
        case CherednikVerdict::NotEquivalent: doc["status"] = "not-equivalent"; break;
        case CherednikVerdict::HypothesesNotMet: doc["status"] = "hypotheses-not-met"; break;
    }
    for (const auto& diag : d.diagnostics) doc["diagnostics"].push_back(diag);
    if (d.certificate) {
        if (!verify_certificate(n, c, c2, *d.certificate))
            throw SelfVerificationFailure("cherednik certificate failed re-verification");
        doc["witness"] = format_certificate(*d.certificate);
        Json res;
        res["p"] = d.certificate->p.get_str();
        res["image_c"] = d.certificate->image_c.get_str();
        res["image_cprime"] = d.certificate->image_c2.get_str();
        Json imgs = Json::array();
        for (const auto& x : d.certificate->aspherical_images) imgs.push_back(x.get_str());
        res["aspherical_images"] = imgs;
        res["sign_twisted"] = d.certificate->sign_twisted;
        doc["result"] = res;
    }
    return doc;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Morita equivalence decisions for deformation parameters of "
                 "Kleinian-type symplectic quotients",
                 "morita"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string quiver_name, lambda_text, lambda2_text, word_text;
    std::vector<std::string> left_factors, right_factors;
    int simple_vertex = 0;
    unsigned long mod_p = 0;
    int rank_n = 2;
    std::string c_text, c2_text;

    auto* info = app.add_subcommand("quiver-info", "print catalog data for a quiver");
    info->add_option("quiver", quiver_name)->required();

    auto* classify = app.add_subcommand("classify", "level/commutative/regular/generic flags");
    classify->add_option("quiver", quiver_name)->required();
    classify->add_option("lambda", lambda_text)->required();

    auto* canon = app.add_subcommand("canon", "canonical orbit representative");
    canon->add_option("quiver", quiver_name)->required();
    canon->add_option("lambda", lambda_text)->required();

    auto* orbit = app.add_subcommand("orbit", "extended-affine-Weyl orbit equality");
    orbit->add_option("quiver", quiver_name)->required();
    orbit->add_option("lambda", lambda_text)->required();
    orbit->add_option("lambda2", lambda2_text)->required();

    auto* product = app.add_subcommand("orbit-product", "orbit equality for products");
    product->add_option("--left", left_factors, "factor QUIVER:PARAMS")->required();
    product->add_option("--right", right_factors, "factor QUIVER:PARAMS")->required();

    auto* gwa = app.add_subcommand("gwa-decide", "root-tuple group-orbit decision");
    gwa->add_option("t", lambda_text)->required();
    gwa->add_option("t2", lambda2_text)->required();

    auto* refl = app.add_subcommand("reflect-module", "reflection functor demo");
    refl->add_option("quiver", quiver_name)->required();
    refl->add_option("lambda", lambda_text)->required();
    refl->add_option("--simple", simple_vertex, "seed simple module vertex")->required();
    refl->add_option("--word", word_text, "reflections applied left to right");
    refl->add_option("--mod", mod_p, "prime field modulus (0 = rationals)");

    auto* cher = app.add_subcommand("cherednik", "type A rational Cherednik decision");
    cher->add_option("--n", rank_n, "symmetric group rank")->required();
    cher->add_option("--c", c_text)->required();
    cher->add_option("--cprime", c2_text)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    bool json_format = (format == "json");

    try {
        Json doc;
        if (info->parsed()) doc = run_quiver_info(quiver_name);
        else if (classify->parsed()) doc = run_classify(quiver_name, lambda_text);
        else if (canon->parsed()) doc = run_canon(quiver_name, lambda_text);
        else if (orbit->parsed()) doc = run_orbit(quiver_name, lambda_text, lambda2_text);
        else if (product->parsed()) doc = run_orbit_product(left_factors, right_factors);
        else if (gwa->parsed()) doc = run_gwa_decide(lambda_text, lambda2_text);
        else if (refl->parsed())
            doc = run_reflect_module(quiver_name, lambda_text, simple_vertex, word_text, mod_p);
        else if (cher->parsed()) doc = run_cherednik(rank_n, c_text, c2_text);
        else {
            err << "usage error: no subcommand\n";
            return 2;
        }
        emit(doc, json_format, out);
        return 0;
    } catch (const SelfVerificationFailure& e) {
        err << "internal self-verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal self-verification failure: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace morita
