#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "dmm/classify.hpp"
#include "dmm/constructions.hpp"
#include "dmm/filters.hpp"
#include "dmm/json_io.hpp"
#include "dmm/morphism.hpp"
#include "dmm/structure.hpp"
#include "dmm/term.hpp"

namespace dmm::cli {

std::string sha256Hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorKind::InternalInvariantViolation, "sha256 failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

namespace {

struct Loaded {
    FiniteAlgebra algebra;
    Json input;
};

class Session {
public:
    Session(const std::vector<std::string>& args, bool corpusMode) : args_(args), corpusMode_(corpusMode) {}

    Loaded load(const std::string& spec) {
        Loaded l{trivialAlgebra(false), Json::object()};
        if (corpusMode_) {
            l.algebra = corpusAlgebra(spec);
            l.input["corpus"] = spec;
            l.input["sha256"] = sha256Hex(dumpAlgebra(l.algebra));
        } else {
            const std::string text = readFile(spec);
            l.algebra = inheritLabels(parseAlgebra(text), std::filesystem::path(spec).stem().string());
            l.input["path"] = spec;
            l.input["sha256"] = sha256Hex(text);
        }
        inputs_.push_back(l.input);
        return l;
    }

    Json certificate(const std::string& command, bool verdict, Json witnesses) const {
        Json c;
        c["command"] = args_;
        c["subcommand"] = command;
        c["inputs"] = inputs_.empty() ? Json::array() : Json(inputs_);
        c["verdict"] = verdict;
        c["witnesses"] = std::move(witnesses);
        c["version"] = kVersion;
        return c;
    }

private:
    // Files named after a corpus key with identical tables pick up its labels.
    static FiniteAlgebra inheritLabels(FiniteAlgebra a, const std::string& stem) {
        if (a.hasLabels()) return a;
        for (const auto& [key, c] : goldenCorpus()) {
            const bool named = key == stem || (a.name() && *a.name() == key);
            if (named && c.sameTables(a)) return a.withLabels(c.labels());
        }
        return a;
    }

    std::vector<std::string> args_;
    bool corpusMode_;
    std::vector<Json> inputs_;
};

std::vector<std::string> splitList(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

Elem resolveElement(const FiniteAlgebra& a, const std::string& token) {
    if (auto hit = a.findLabel(token)) return *hit;
    try {
        std::size_t used = 0;
        const int idx = std::stoi(token, &used);
        if (used == token.size() && idx >= 0 && idx < a.size()) return idx;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::BadInput, "unknown element '" + token + "'");
}

std::vector<Elem> resolveSet(const FiniteAlgebra& a, const std::string& text) {
    std::vector<Elem> out;
    for (const auto& t : splitList(text)) out.push_back(resolveElement(a, t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Json labelsOf(const FiniteAlgebra& a, const std::vector<Elem>& xs) {
    Json out = Json::array();
    for (Elem x : xs) out.push_back(a.label(x));
    return out;
}

Json assignmentJson(const FiniteAlgebra& a, const Assignment& asg) {
    Json out = Json::object();
    for (const auto& [v, x] : asg) out[v] = {{"index", x}, {"label", a.label(x)}};
    return out;
}

std::string setText(const FiniteAlgebra& a, const std::vector<Elem>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + a.label(xs[i]);
    return s + "}";
}

std::string displayName(const FiniteAlgebra& a) { return a.name().value_or("algebra"); }

Json mapJson(const ElementMap& m) { return Json(m); }

int emit(std::ostream& out, const Json& cert, bool verdict) {
    out << cert.dump(2) << "\n";
    return verdict ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite residuated lattices: construction, classification and epimorphism checks", "dmm"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    bool corpusMode = false;
    app.add_flag("--corpus", corpusMode, "Treat algebra arguments as built-in corpus keys");

    std::string input, input2, spec, ambient, sub, gens, mode, suite, equation, named, generators;
    std::vector<std::string> constructArgs;
    std::string element;
    bool gsm = false;

    auto* validate = app.add_subcommand("validate", "Validate an algebra document");
    validate->add_option("input", input, "Algebra")->required();

    auto* classifyCmd = app.add_subcommand("classify", "Report class membership flags");
    classifyCmd->add_option("input", input, "Algebra")->required();

    auto* construct = app.add_subcommand("construct", "Build an algebra and print its JSON document");
    construct->add_option("args", constructArgs,
                          "sugihara N | otimes SPEC | oplus K | reflect IN | rext S A | ap P | ap+ P | named KEY")
        ->required();

    auto* homs = app.add_subcommand("homs", "Enumerate homomorphisms A -> B");
    homs->add_option("source", input, "Source algebra")->required();
    homs->add_option("target", input2, "Target algebra")->required();

    auto* epic = app.add_subcommand("epic", "Decide whether a subalgebra is epic");
    epic->add_option("--ambient", ambient, "Ambient algebra")->required();
    epic->add_option("--sub", sub, "Comma-separated subuniverse")->required();
    epic->add_option("--gens", gens, "Comma-separated generators of the variety")->required();

    auto* separate = app.add_subcommand("separate", "Construct a separating pair");
    separate->add_option("--ambient", ambient, "Ambient algebra")->required();
    separate->add_option("--sub", sub, "Comma-separated subuniverse")->required();
    separate->add_option("--element", element, "Element outside the subuniverse")->required();
    separate->add_flag("--gsm", gsm, "Use the generalized Sugihara monoid construction");

    auto* decompose = app.add_subcommand("decompose", "Structural decompositions");
    decompose->add_option("--mode", mode, "otimes | dmm | reflect")
        ->required()
        ->check(CLI::IsMember({"otimes", "dmm", "reflect"}));
    decompose->add_option("input", input, "Algebra")->required();

    auto* check = app.add_subcommand("check", "Equation and structure suites");
    check->add_option("--suite", suite, "negcone | bounds | structure | compactness | formulas")
        ->check(CLI::IsMember({"negcone", "bounds", "structure", "compactness", "formulas"}));
    check->add_option("--equation", equation, "Equation 'lhs = rhs'");
    check->add_option("--named", named, "Named equation key");
    check->add_option("--generators", generators, "Generators for the bounds suite");
    check->add_option("input", input, "Algebra")->required();

    auto* subalg = app.add_subcommand("subalg", "Subalgebra generated by a set");
    subalg->add_option("--gens", gens, "Comma-separated generators")->required();
    subalg->add_option("input", input, "Algebra")->required();

    std::vector<std::string> argvStore{"dmm"};
    argvStore.insert(argvStore.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argvStore) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Session session(args, corpusMode);
    try {
        if (validate->parsed()) {
            Loaded l{trivialAlgebra(false), {}};
            try {
                l = session.load(input);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::BadInput) throw;
                Json w{{"error", kindName(e.kind())}, {"message", e.what()}};
                err << "invalid: " << e.what() << "\n";
                return emit(out, session.certificate("validate", false, w), false);
            }
            const FiniteAlgebra& a = l.algebra;
            Json violations = Json::array();
            for (const auto& v : derivedLawViolations(a))
                violations.push_back({{"law", v.law}, {"assignment", v.assignment}});
            const bool ok = violations.empty();
            Json w{{"size", a.size()}, {"involutive", a.hasInvolution()}, {"lawViolations", violations}};
            err << displayName(a) << ": valid " << (a.hasInvolution() ? "IRL" : "RL") << " of size " << a.size()
                << ", " << violations.size() << " derived-law violations\n";
            return emit(out, session.certificate("validate", ok, w), ok);
        }

        if (classifyCmd->parsed()) {
            const FiniteAlgebra a = session.load(input).algebra;
            const ClassificationReport r = classify(a);
            Json flags = Json::object();
            err << displayName(a) << " (size " << a.size() << "):";
            for (const auto& [name, flag] : r.entries()) {
                flags[name] = {{"value", flag->value}, {"witness", labelsOf(a, flag->witness)}, {"note", flag->note}};
                if (flag->value) err << " " << name;
            }
            err << "\n";
            return emit(out, session.certificate("classify", true, {{"flags", flags}}), true);
        }

        if (construct->parsed()) {
            const std::string kind = constructArgs.front();
            auto arity = [&](std::size_t n) {
                if (constructArgs.size() != n + 1)
                    throw Error(ErrorKind::BadInput, "construct " + kind + " takes " + std::to_string(n) + " argument(s)");
            };
            auto intArg = [&](std::size_t i) {
                try {
                    return std::stoi(constructArgs.at(i));
                } catch (const std::exception&) {
                    throw Error(ErrorKind::BadInput, "expected an integer, got '" + constructArgs.at(i) + "'");
                }
            };
            FiniteAlgebra a = trivialAlgebra(false);
            if (kind == "sugihara") {
                arity(1);
                a = sugihara(intArg(1));
            } else if (kind == "otimes") {
                arity(1);
                Json doc;
                try {
                    doc = Json::parse(readFile(constructArgs[1]));
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorKind::BadInput, e.what());
                }
                if (!doc.is_object() || !doc.contains("base") || !doc.contains("sizes") || !doc["sizes"].is_array())
                    throw Error(ErrorKind::SpecInvalid, "spec must be {\"base\": algebra, \"sizes\": [...]}");
                FiniteAlgebra base = doc["base"].is_string() ? corpusAlgebra(doc["base"].get<std::string>())
                                                             : fromJson(doc["base"]);
                std::vector<int> sizes;
                for (const auto& s : doc["sizes"]) {
                    if (!s.is_number_integer()) throw Error(ErrorKind::SpecInvalid, "sizes must be integers");
                    sizes.push_back(s.get<int>());
                }
                a = otimes({base, sizes});
            } else if (kind == "oplus") {
                arity(1);
                a = oplus(intArg(1));
            } else if (kind == "reflect") {
                arity(1);
                a = reflection(session.load(constructArgs[1]).algebra);
            } else if (kind == "rext") {
                arity(2);
                const FiniteAlgebra s = session.load(constructArgs[1]).algebra;
                a = rigorousExtension(s, session.load(constructArgs[2]).algebra);
            } else if (kind == "ap") {
                arity(1);
                a = apFamily(intArg(1));
            } else if (kind == "ap+") {
                arity(1);
                a = apPlus(intArg(1));
            } else if (kind == "named") {
                arity(1);
                const auto keys = namedAlgebraKeys();
                const std::string& key = constructArgs[1];
                a = std::find(keys.begin(), keys.end(), key) != keys.end() ? namedAlgebra(key) : corpusAlgebra(key);
            } else {
                throw Error(ErrorKind::BadInput, "unknown construction '" + kind + "'");
            }
            const std::string doc = dumpAlgebra(a);
            parseAlgebra(doc);
            out << doc;
            err << displayName(a) << ": size " << a.size() << "\n";
            return 0;
        }

        if (homs->parsed()) {
            const FiniteAlgebra a = session.load(input).algebra;
            const FiniteAlgebra b = session.load(input2).algebra;
            const std::vector<ElementMap> maps = allHomomorphisms(a, b);
            Json list = Json::array();
            for (const auto& m : maps) list.push_back(mapJson(m));
            err << maps.size() << " homomorphism(s) " << displayName(a) << " -> " << displayName(b) << "\n";
            const bool any = !maps.empty();
            return emit(out, session.certificate("homs", any, {{"count", maps.size()}, {"maps", list}}), any);
        }

        if (epic->parsed()) {
            const FiniteAlgebra a = session.load(ambient).algebra;
            const std::vector<Elem> b = resolveSet(a, sub);
            std::vector<FiniteAlgebra> generators;
            for (const auto& g : splitList(gens)) generators.push_back(session.load(g).algebra);
            if (generators.empty()) throw Error(ErrorKind::BadInput, "--gens is empty");
            const EpicVerdict v = isEpic(a, b, generators);
            Json w{{"sub", b}, {"subLabels", labelsOf(a, b)}};
            if (v.witness) {
                w["target"] = toJson(v.witness->target);
                w["g"] = mapJson(v.witness->g);
                w["h"] = mapJson(v.witness->h);
                w["disagreement"] = v.witness->disagreement;
            }
            err << setText(a, b) << (v.epic ? " is epic in " : " is not epic in ") << displayName(a) << "\n";
            return emit(out, session.certificate("epic", v.epic, w), v.epic);
        }

        if (separate->parsed()) {
            const FiniteAlgebra a = session.load(ambient).algebra;
            const std::vector<Elem> b = resolveSet(a, sub);
            const Elem x = resolveElement(a, element);
            const SeparatingPair p = gsm ? separatingPairGsm(a, b, x) : separatingPairIdem(a, b, x);
            Json w{{"target", toJson(p.target)}, {"g", mapJson(p.g)},        {"h", mapJson(p.h)},
                   {"requested", p.requested},    {"used", p.used},          {"replacedByStar", p.replacedByStar},
                   {"method", p.method},          {"filter", p.filter}};
            err << "separating pair for " << a.label(x) << " via " << p.method << ", target size "
                << p.target.size() << "\n";
            return emit(out, session.certificate("separate", true, w), true);
        }

        if (decompose->parsed()) {
            const FiniteAlgebra a = session.load(input).algebra;
            if (mode == "otimes") {
                const OtimesDecomposition d = decomposeOtimes(a);
                Json blocks = Json::array();
                for (const auto& blk : d.blocks) blocks.push_back(blk);
                Json w{{"base", toJson(d.base)},         {"baseEmbedding", mapJson(d.baseEmbedding)},
                       {"blocks", blocks},               {"sizes", d.sizes},
                       {"reassembled", toJson(d.reassembled)}, {"iso", mapJson(d.iso)}};
                err << "A** has " << d.base.size() << " elements; block sizes";
                for (int s : d.sizes) err << " " << s;
                err << "\n";
                return emit(out, session.certificate("decompose", true, w), true);
            }
            if (mode == "dmm") {
                const DmmDecomposition d = decomposeDmm(a);
                Json w{{"core", toJson(d.core)},
                       {"coreEmbedding", mapJson(d.coreEmbedding)},
                       {"oddFactor", toJson(d.oddFactor)},
                       {"quotientMap", mapJson(d.quotientMap)},
                       {"eClass", d.eClass},
                       {"reassembled", toJson(d.reassembled)},
                       {"iso", mapJson(d.iso)}};
                err << "core size " << d.core.size() << ", odd factor size " << d.oddFactor.size() << "\n";
                return emit(out, session.certificate("decompose", true, w), true);
            }
            const ReflectionRecognition r = reflectionRecognize(a);
            Json w{{"carrier", r.carrier}, {"reason", r.reason}};
            if (r.d) w["d"] = toJson(*r.d);
            if (r.iso) w["iso"] = mapJson(*r.iso);
            err << (r.recognized ? "recognized as R(D) with |D| = " + std::to_string(r.d->size())
                                 : "not a reflection: " + r.reason)
                << "\n";
            return emit(out, session.certificate("decompose", r.recognized, w), r.recognized);
        }

        if (check->parsed()) {
            const int chosen = int(!suite.empty()) + int(!equation.empty()) + int(!named.empty());
            if (chosen != 1) throw Error(ErrorKind::BadInput, "check needs exactly one of --suite, --equation, --named");
            const FiniteAlgebra a = session.load(input).algebra;
            auto equationCert = [&](const Equation& eq, const std::string& key) {
                const EquationVerdict v = checkEquation(a, eq);
                Json w{{"equation", printTerm(eq.lhs) + " = " + printTerm(eq.rhs)}, {"vars", v.vars}};
                if (!key.empty()) w["key"] = key;
                if (!v.holds) {
                    w["counterexample"] = assignmentJson(a, v.counterexample);
                    w["lhs"] = v.lhsValue;
                    w["rhs"] = v.rhsValue;
                    err << "fails at";
                    for (const auto& [var, x] : v.counterexample) err << " " << var << " = " << a.label(x);
                    err << "\n";
                } else {
                    err << "holds on " << displayName(a) << "\n";
                }
                return emit(out, session.certificate("check", v.holds, w), v.holds);
            };
            if (!equation.empty()) return equationCert(parseEquation(equation, ParseOptions{a.size()}), "");
            if (!named.empty()) return equationCert(namedEquation(named), named);
            if (suite == "negcone") return equationCert(namedEquation("negcone"), "negcone");
            if (suite == "bounds") {
                const std::vector<Elem> gen = generators.empty() ? minimalGeneratingSet(a) : resolveSet(a, generators);
                const BoundReport r = boundCheck(a, gen);
                Json w{{"rule", r.rule}, {"generators", gen}, {"generatorLabels", labelsOf(a, gen)},
                       {"n", r.generators}, {"size", r.size}};
                w["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
                w["slack"] = r.slack ? Json(*r.slack) : Json(nullptr);
                err << "|A| = " << r.size << ", rule " << r.rule;
                if (r.bound) err << ", bound " << *r.bound << ", slack " << *r.slack;
                err << "\n";
                return emit(out, session.certificate("check", r.holds, w), r.holds);
            }
            if (suite == "structure") {
                const NegGenReport r = negGenEquivalenceSuite(a);
                Json w{{"kind", r.kind},
                       {"negativelyGenerated", r.negativelyGenerated},
                       {"missing", r.missing},
                       {"equationKey", r.equationKey},
                       {"equational", r.equational},
                       {"structural", r.structural},
                       {"structuralNote", r.structuralNote},
                       {"agree", r.agree}};
                if (r.counterexample) w["counterexample"] = assignmentJson(a, *r.counterexample);
                err << "negatively generated " << r.negativelyGenerated << ", " << r.equationKey << " "
                    << r.equational << ", structural " << r.structural << " (" << r.structuralNote << ")\n";
                return emit(out, session.certificate("check", r.agree, w), r.agree);
            }
            if (suite == "compactness") {
                const CompactnessReport r = rigorousCompactnessSuite(a);
                Json w{{"topAbsorbs", r.topAbsorbs}, {"residToBottom", r.residToBottom}, {"topResid", r.topResid},
                       {"agree", r.agree},           {"boundedFsiDmm", r.boundedFsiDmm}};
                err << "conditions " << r.topAbsorbs << r.residToBottom << r.topResid << "\n";
                return emit(out, session.certificate("check", r.consistent, w), r.consistent);
            }
            const std::vector<FormulaMismatch> ms = structureFormulaMismatches(a);
            Json list = Json::array();
            for (const auto& m : ms)
                list.push_back({{"op", m.op}, {"x", m.x}, {"y", m.y}, {"table", m.table}, {"formula", m.formula}});
            err << ms.size() << " cell(s) differ from the idempotent-chain formulas\n";
            return emit(out, session.certificate("check", ms.empty(), {{"mismatches", list}}), ms.empty());
        }

        if (subalg->parsed()) {
            const FiniteAlgebra a = session.load(input).algebra;
            const Subalgebra s = subalgebraGenerated(a, resolveSet(a, gens));
            const bool proper = s.algebra.size() < a.size();
            Json w{{"universe", s.embedding}, {"labels", labelsOf(a, s.embedding)}, {"proper", proper},
                   {"algebra", toJson(s.algebra)}};
            err << "Sg = " << setText(a, s.embedding) << "\n";
            return emit(out, session.certificate("subalg", true, w), true);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace dmm::cli
