#include "dmm/term.hpp"

#include <cctype>
#include <set>

namespace dmm {

Term Term::var(std::string name) { return Term{Kind::Var, std::move(name), {}}; }
Term Term::e() { return Term{Kind::E, {}, {}}; }
Term Term::f() { return neg(e()); }
Term Term::fuse(Term x, Term y) { return Term{Kind::Fuse, {}, {std::move(x), std::move(y)}}; }
Term Term::resid(Term x, Term y) { return Term{Kind::Resid, {}, {std::move(x), std::move(y)}}; }
Term Term::meet(Term x, Term y) { return Term{Kind::Meet, {}, {std::move(x), std::move(y)}}; }
Term Term::join(Term x, Term y) { return Term{Kind::Join, {}, {std::move(x), std::move(y)}}; }
Term Term::neg(Term x) { return Term{Kind::Neg, {}, {std::move(x)}}; }
Term Term::star(Term x) { return resid(std::move(x), e()); }
Term Term::abs(Term x) { return resid(x, x); }
Term Term::biimp(Term x, Term y) { return meet(resid(x, y), resid(y, x)); }

Term Term::power(Term x, int n) {
    if (n == 0) return e();
    Term out = x;
    for (int i = 1; i < n; ++i) out = fuse(out, x);
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const ParseOptions& opts) : s_(text), opts_(opts) {}

    Term parseAll() {
        Term t = implication();
        skipSpace();
        if (pos_ != s_.size()) fail("unexpected input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_));
    }

    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(const char* tok) {
        skipSpace();
        const std::string t(tok);
        if (s_.compare(pos_, t.size(), t) == 0) {
            pos_ += t.size();
            return true;
        }
        return false;
    }

    bool peek(const char* tok) {
        skipSpace();
        return s_.compare(pos_, std::string(tok).size(), tok) == 0;
    }

    Term implication() {
        Term lhs = join();
        if (accept("->")) return Term::resid(std::move(lhs), implication());
        if (accept("<->")) return Term::biimp(std::move(lhs), join());
        return lhs;
    }

    Term join() {
        Term t = meet();
        while (accept("\\/")) t = Term::join(std::move(t), meet());
        return t;
    }

    Term meet() {
        Term t = fusion();
        while (accept("/\\")) t = Term::meet(std::move(t), fusion());
        return t;
    }

    Term fusion() {
        Term t = postfix();
        while (accept("*")) t = Term::fuse(std::move(t), postfix());
        return t;
    }

    Term postfix() {
        Term t = unary();
        while (accept("^")) {
            if (accept("*")) {
                t = Term::star(std::move(t));
                continue;
            }
            skipSpace();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected '*' or an exponent after '^'");
            const std::string digits = s_.substr(start, pos_ - start);
            if (digits.size() > 6) throw Error(ErrorKind::ExponentTooLarge, "exponent " + digits);
            const int n = std::stoi(digits);
            if (opts_.maxExponent && n > *opts_.maxExponent)
                throw Error(ErrorKind::ExponentTooLarge,
                            "exponent " + digits + " exceeds " + std::to_string(*opts_.maxExponent));
            t = Term::power(std::move(t), n);
        }
        return t;
    }

    Term unary() {
        if (accept("~")) return Term::neg(unary());
        return atom();
    }

    Term atom() {
        skipSpace();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (accept("(")) {
            Term t = implication();
            if (!accept(")")) fail("expected ')'");
            return t;
        }
        if (accept("|")) {
            Term t = implication();
            if (!accept("|")) fail("expected '|'");
            return Term::abs(std::move(t));
        }
        const char c = s_[pos_];
        if (c >= 'a' && c <= 'z') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "e") return Term::e();
            if (name == "f") return Term::f();
            return Term::var(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const ParseOptions& opts_;
    std::size_t pos_ = 0;
};

void collectVars(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Var) out.insert(t.name);
    for (const Term& c : t.args) collectVars(c, out);
}

} // namespace

Term parseTerm(const std::string& text, const ParseOptions& opts) { return Parser(text, opts).parseAll(); }

std::string printTerm(const Term& t) {
    auto bin = [&](const char* op) { return "(" + printTerm(t.args[0]) + " " + op + " " + printTerm(t.args[1]) + ")"; };
    switch (t.kind) {
    case Term::Kind::Var: return t.name;
    case Term::Kind::E: return "e";
    case Term::Kind::Neg:
        if (t.args[0].kind == Term::Kind::E) return "f";
        return "~" + printTerm(t.args[0]);
    case Term::Kind::Fuse: return bin("*");
    case Term::Kind::Resid: return bin("->");
    case Term::Kind::Meet: return bin("/\\");
    case Term::Kind::Join: return bin("\\/");
    }
    return "?";
}

std::vector<std::string> variables(const Term& t) {
    std::set<std::string> vs;
    collectVars(t, vs);
    return {vs.begin(), vs.end()};
}

bool usesNegation(const Term& t) {
    if (t.kind == Term::Kind::Neg) return true;
    for (const Term& c : t.args)
        if (usesNegation(c)) return true;
    return false;
}

Elem eval(const FiniteAlgebra& a, const Term& t, const Assignment& asg) {
    switch (t.kind) {
    case Term::Kind::Var: {
        auto it = asg.find(t.name);
        if (it == asg.end()) throw Error(ErrorKind::UnboundVariable, t.name);
        return it->second;
    }
    case Term::Kind::E: return a.e();
    case Term::Kind::Neg: return a.neg(eval(a, t.args[0], asg));
    case Term::Kind::Fuse: return a.fuse(eval(a, t.args[0], asg), eval(a, t.args[1], asg));
    case Term::Kind::Resid: return a.resid(eval(a, t.args[0], asg), eval(a, t.args[1], asg));
    case Term::Kind::Meet: return a.meet(eval(a, t.args[0], asg), eval(a, t.args[1], asg));
    case Term::Kind::Join: return a.join(eval(a, t.args[0], asg), eval(a, t.args[1], asg));
    }
    throw Error(ErrorKind::InternalInvariantViolation, "unknown term kind");
}

Equation parseEquation(const std::string& text, const ParseOptions& opts) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::SyntaxError, "expected 'lhs = rhs'");
    if (text.find('=', eq + 1) != std::string::npos)
        throw Error(ErrorKind::SyntaxError, "more than one '=' at position " + std::to_string(text.find('=', eq + 1)));
    return {parseTerm(text.substr(0, eq), opts), parseTerm(text.substr(eq + 1), opts)};
}

EquationVerdict checkEquation(const FiniteAlgebra& a, const Term& lhs, const Term& rhs) {
    if (!a.hasInvolution() && (usesNegation(lhs) || usesNegation(rhs)))
        throw Error(ErrorKind::NoInvolution, "equation uses ~ but the algebra has no involution");
    std::set<std::string> vs;
    collectVars(lhs, vs);
    collectVars(rhs, vs);
    EquationVerdict verdict;
    verdict.vars.assign(vs.begin(), vs.end());
    const std::size_t k = verdict.vars.size();
    std::vector<Elem> digits(k, 0);
    Assignment asg;
    while (true) {
        for (std::size_t i = 0; i < k; ++i) asg[verdict.vars[i]] = digits[i];
        const Elem l = eval(a, lhs, asg);
        const Elem r = eval(a, rhs, asg);
        if (l != r) {
            verdict.holds = false;
            verdict.counterexample = asg;
            verdict.lhsValue = l;
            verdict.rhsValue = r;
            return verdict;
        }
        // Odometer with the last variable least significant.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++digits[i] < a.size()) break;
            digits[i] = 0;
            if (i == 0) return verdict;
        }
        if (k == 0) return verdict;
    }
}

EquationVerdict checkEquation(const FiniteAlgebra& a, const Equation& eq) { return checkEquation(a, eq.lhs, eq.rhs); }

namespace terms {

Term dPrime(const Term& x) {
    const Term f2 = Term::fuse(Term::f(), Term::f());
    return Term::meet(Term::resid(f2, Term::fuse(x, Term::f())), Term::fuse(f2, Term::neg(x)));
}

Term sigma(const Term& x) {
    return Term::fuse(Term::meet(x, Term::e()), Term::star(Term::meet(Term::star(x), Term::e())));
}

Term d(const Term& x) { return dPrime(Term::neg(x)); }

Term sigmaPrime(const Term& x) { return Term::neg(sigma(Term::neg(x))); }

} // namespace terms

Equation namedEquation(const std::string& key) {
    const Term x = Term::var("x");
    const Term y = Term::var("y");
    const Term e = Term::e();
    const Term f = Term::f();
    if (key == "sigma") return {terms::sigma(x), x};
    if (key == "sigma-sm") return {x, Term::fuse(Term::meet(x, e), Term::neg(Term::meet(Term::neg(x), f)))};
    if (key == "negcone") {
        const Term s = terms::sigma(x);
        const Term sp = terms::sigmaPrime(x);
        const Term f2 = Term::fuse(f, f);
        const Term rhs = Term::join(Term::join(Term::meet(terms::d(s), s), Term::meet(terms::dPrime(sp), sp)),
                                    Term::resid(Term::join(f2, Term::neg(f2)), sp));
        return {x, rhs};
    }
    if (key == "gsm") {
        const Term xe = Term::join(x, e);
        return {Term::star(Term::star(xe)), xe};
    }
    if (key == "semilinear") return {Term::meet(e, Term::join(Term::resid(x, y), Term::resid(y, x))), e};
    throw Error(ErrorKind::BadInput, "unknown named equation '" + key + "'");
}

std::vector<std::string> namedEquationKeys() { return {"sigma", "sigma-sm", "negcone", "gsm", "semilinear"}; }

} // namespace dmm
