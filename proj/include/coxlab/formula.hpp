#ifndef COXLAB_FORMULA_HPP_
#define COXLAB_FORMULA_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph_product.hpp"
#include "word.hpp"

namespace coxlab {

  // First-order formulas in the language of groups. Terms: e, variables,
  // generator constants, t*t, t^-1, t^k, t^y (= y^-1 t y), [t,t].
  struct Term {
    enum class Kind { identity, var, gen, mul, inv, pow, conj, comm };
    Kind                  kind = Kind::identity;
    std::string           name;  // var / gen
    int                   gen  = -1;
    long                  exp  = 0;
    std::shared_ptr<Term> a, b;
  };

  using TermPtr = std::shared_ptr<Term>;

  struct Formula {
    enum class Kind { eq, neq, and_, or_, not_, implies, forall, exists };
    Kind                     kind = Kind::eq;
    TermPtr                  lhs, rhs;  // atoms
    std::shared_ptr<Formula> f, g;
    std::vector<std::string> vars;  // quantifier block
  };

  using FormulaPtr = std::shared_ptr<Formula>;

  namespace detail {

    inline void term_vars(Term const& t, std::set<std::string>& out) {
      if (t.kind == Term::Kind::var) {
        out.insert(t.name);
      }
      if (t.a) {
        term_vars(*t.a, out);
      }
      if (t.b) {
        term_vars(*t.b, out);
      }
    }

    class FormulaParser {
     public:
      FormulaParser(GraphProduct const& gp, std::string text)
          : _gp(gp), _src(std::move(text)) {
        tokenize();
      }

      FormulaPtr parse(std::set<std::string> const& free_vars) {
        _scope = free_vars;
        auto f = formula();
        if (_pos != _tok.size()) {
          fail("unexpected '" + _tok[_pos] + "'");
        }
        return f;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw InvalidInput("malformed formula: " + msg);
      }

      void tokenize() {
        size_t i = 0;
        while (i < _src.size()) {
          char c = _src[i];
          if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
          } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < _src.size()
                   && (std::isalnum(static_cast<unsigned char>(_src[j]))
                       || _src[j] == '_')) {
              ++j;
            }
            _tok.push_back(_src.substr(i, j - i));
            i = j;
          } else if (_src.compare(i, 2, "->") == 0
                     || _src.compare(i, 2, "!=") == 0) {
            _tok.push_back(_src.substr(i, 2));
            i += 2;
          } else if (std::string("()[],.*^=&|!-").find(c)
                     != std::string::npos) {
            _tok.push_back(std::string(1, c));
            ++i;
          } else {
            fail(std::string("bad character '") + c + "'");
          }
        }
      }

      bool peek(std::string const& s) const {
        return _pos < _tok.size() && _tok[_pos] == s;
      }

      void expect(std::string const& s) {
        if (!peek(s)) {
          fail("expected '" + s + "'"
               + (_pos < _tok.size() ? " near '" + _tok[_pos] + "'"
                                     : " at end"));
        }
        ++_pos;
      }

      static bool is_ident(std::string const& s) {
        return !s.empty()
               && (std::isalnum(static_cast<unsigned char>(s[0])) || s[0] == '_');
      }

      FormulaPtr formula() {
        if (peek("forall") || peek("exists")) {
          auto q  = std::make_shared<Formula>();
          q->kind = _tok[_pos] == "forall" ? Formula::Kind::forall
                                           : Formula::Kind::exists;
          ++_pos;
          while (_pos < _tok.size() && is_ident(_tok[_pos])) {
            q->vars.push_back(_tok[_pos++]);
          }
          if (q->vars.empty()) {
            fail("quantifier without variables");
          }
          expect(".");
          auto saved = _scope;
          _scope.insert(q->vars.begin(), q->vars.end());
          q->f   = formula();
          _scope = saved;
          return q;
        }
        auto lhs = disjunction();
        if (peek("->")) {
          ++_pos;
          auto r  = std::make_shared<Formula>();
          r->kind = Formula::Kind::implies;
          r->f    = lhs;
          r->g    = formula();
          return r;
        }
        return lhs;
      }

      FormulaPtr binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
        auto r  = std::make_shared<Formula>();
        r->kind = k;
        r->f    = std::move(a);
        r->g    = std::move(b);
        return r;
      }

      FormulaPtr disjunction() {
        auto f = conjunction();
        while (peek("|")) {
          ++_pos;
          f = binary(Formula::Kind::or_, f, conjunction());
        }
        return f;
      }

      FormulaPtr conjunction() {
        auto f = unary();
        while (peek("&")) {
          ++_pos;
          f = binary(Formula::Kind::and_, f, unary());
        }
        return f;
      }

      FormulaPtr unary() {
        if (peek("!")) {
          ++_pos;
          auto r  = std::make_shared<Formula>();
          r->kind = Formula::Kind::not_;
          r->f    = unary();
          return r;
        }
        if (peek("forall") || peek("exists")) {
          return formula();
        }
        if (peek("(")) {
          size_t save = _pos;
          try {
            ++_pos;
            auto f = formula();
            expect(")");
            return f;
          } catch (InvalidInput const&) {
            _pos = save;
          }
        }
        return atom();
      }

      FormulaPtr atom() {
        auto l  = term();
        auto r  = std::make_shared<Formula>();
        if (peek("=")) {
          r->kind = Formula::Kind::eq;
        } else if (peek("!=")) {
          r->kind = Formula::Kind::neq;
        } else {
          fail("expected '=' or '!='");
        }
        ++_pos;
        r->lhs = l;
        r->rhs = term();
        return r;
      }

      TermPtr term() {
        auto t = factor();
        while (peek("*")) {
          ++_pos;
          auto m  = std::make_shared<Term>();
          m->kind = Term::Kind::mul;
          m->a    = t;
          m->b    = factor();
          t       = m;
        }
        return t;
      }

      TermPtr factor() {
        auto t = primary();
        while (peek("^")) {
          ++_pos;
          auto p = std::make_shared<Term>();
          p->a   = t;
          if (peek("-")) {
            ++_pos;
            if (_pos >= _tok.size() || !is_number(_tok[_pos])) {
              fail("expected exponent");
            }
            p->kind = Term::Kind::pow;
            p->exp  = -std::stol(_tok[_pos++]);
            if (p->exp == -1) {
              p->kind = Term::Kind::inv;
            }
          } else if (_pos < _tok.size() && is_number(_tok[_pos])) {
            p->kind = Term::Kind::pow;
            p->exp  = std::stol(_tok[_pos++]);
          } else {
            p->kind = Term::Kind::conj;
            p->b    = primary();
          }
          t = p;
        }
        return t;
      }

      static bool is_number(std::string const& s) {
        return !s.empty()
               && std::all_of(s.begin(), s.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                  });
      }

      TermPtr primary() {
        if (_pos >= _tok.size()) {
          fail("unexpected end");
        }
        auto t = std::make_shared<Term>();
        if (peek("(")) {
          ++_pos;
          auto inner = term();
          expect(")");
          return inner;
        }
        if (peek("[")) {
          ++_pos;
          t->kind = Term::Kind::comm;
          t->a    = term();
          expect(",");
          t->b = term();
          expect("]");
          return t;
        }
        std::string const& s = _tok[_pos];
        if (!is_ident(s)) {
          fail("unexpected '" + s + "'");
        }
        ++_pos;
        if (_scope.count(s) != 0) {
          t->kind = Term::Kind::var;
          t->name = s;
        } else if (s == "e") {
          t->kind = Term::Kind::identity;
        } else {
          for (size_t v = 0; v < _gp.num_vertices(); ++v) {
            if (_gp.vertex_names()[v] == s) {
              t->kind = Term::Kind::gen;
              t->name = s;
              t->gen  = _gp.letter_of_vertex(static_cast<int>(v));
              return t;
            }
          }
          fail("unknown symbol '" + s + "'");
        }
        return t;
      }

      GraphProduct const&      _gp;
      std::string              _src;
      std::vector<std::string> _tok;
      size_t                   _pos = 0;
      std::set<std::string>    _scope;
    };

  }  // namespace detail

  inline FormulaPtr parse_formula(GraphProduct const&          gp,
                                  std::string const&           text,
                                  std::set<std::string> const& free_vars = {}) {
    return detail::FormulaParser(gp, text).parse(free_vars);
  }

  using Assignment = std::map<std::string, Word>;

  // Bounded semantics: every quantifier ranges over the given ball.
  class BoundedEvaluator {
   public:
    BoundedEvaluator(GraphProduct const& gp, std::vector<Word> domain)
        : _gp(gp), _dom(std::move(domain)) {
      if (_dom.empty()) {
        throw InvalidInput("empty quantifier domain");
      }
    }

    bool eval(Formula const& f, Assignment env) const {
      return holds(f, env);
    }

    Word eval_term(Term const& t, Assignment const& env) const {
      switch (t.kind) {
        case Term::Kind::identity:
          return {};
        case Term::Kind::var: {
          auto it = env.find(t.name);
          if (it == env.end()) {
            throw InvalidInput("unassigned variable '" + t.name + "'");
          }
          return it->second;
        }
        case Term::Kind::gen:
          return Word{t.gen};
        case Term::Kind::mul:
          return _gp.multiply(eval_term(*t.a, env), eval_term(*t.b, env));
        case Term::Kind::inv:
          return _gp.inverse(eval_term(*t.a, env));
        case Term::Kind::pow:
          return _gp.power(eval_term(*t.a, env), t.exp);
        case Term::Kind::conj: {
          Word y = eval_term(*t.b, env);
          return _gp.multiply({_gp.inverse(y), eval_term(*t.a, env), y});
        }
        case Term::Kind::comm:
          return _gp.commutator(eval_term(*t.a, env), eval_term(*t.b, env));
      }
      return {};
    }

   private:
    bool holds(Formula const& f, Assignment& env) const {
      switch (f.kind) {
        case Formula::Kind::eq:
          return eval_term(*f.lhs, env) == eval_term(*f.rhs, env);
        case Formula::Kind::neq:
          return eval_term(*f.lhs, env) != eval_term(*f.rhs, env);
        case Formula::Kind::and_:
          return holds(*f.f, env) && holds(*f.g, env);
        case Formula::Kind::or_:
          return holds(*f.f, env) || holds(*f.g, env);
        case Formula::Kind::not_:
          return !holds(*f.f, env);
        case Formula::Kind::implies:
          return !holds(*f.f, env) || holds(*f.g, env);
        case Formula::Kind::forall:
        case Formula::Kind::exists:
          return quantify(f, env);
      }
      return false;
    }

    bool quantify(Formula const& f, Assignment& env) const {
      bool                  exists = f.kind == Formula::Kind::exists;
      std::set<std::string> bound(f.vars.begin(), f.vars.end());
      Formula const&        body = *f.f;
      // atom whose two sides share no bound variable: compare image sets
      if (body.kind == Formula::Kind::eq || body.kind == Formula::Kind::neq) {
        std::set<std::string> lv, rv;
        detail::term_vars(*body.lhs, lv);
        detail::term_vars(*body.rhs, rv);
        bool disjoint = true;
        for (auto const& v : lv) {
          disjoint = disjoint && !(bound.count(v) && rv.count(v));
        }
        if (disjoint) {
          auto shadow = env;
          for (auto const& v : bound) {
            shadow.erase(v);
          }
          WordSet li = image(*body.lhs, bound, shadow);
          WordSet ri = image(*body.rhs, bound, shadow);
          bool    meet = false;
          for (auto const& w : li) {
            if (ri.count(w) != 0) {
              meet = true;
              break;
            }
          }
          bool single = li.size() == 1 && ri.size() == 1 && meet;
          if (body.kind == Formula::Kind::eq) {
            return exists ? meet : single;
          }
          return exists ? !single : !meet;
        }
      }
      std::vector<std::string> vars(f.vars.begin(), f.vars.end());
      auto                     saved = env;
      bool result = exists ? assign(vars, 0, env, body, true)
                           : !assign(vars, 0, env, body, false);
      env = saved;
      return result;
    }

    // Is there an assignment of vars[i..] making body evaluate to `want`?
    bool assign(std::vector<std::string> const& vars,
                size_t                          i,
                Assignment&                     env,
                Formula const&                  body,
                bool                            want) const {
      if (i == vars.size()) {
        return holds(body, env) == want;
      }
      for (auto const& w : _dom) {
        env[vars[i]] = w;
        if (assign(vars, i + 1, env, body, want)) {
          return true;
        }
      }
      return false;
    }

    // Values of t as its bound variables range over the domain.
    WordSet image(Term const&                  t,
                  std::set<std::string> const& bound,
                  Assignment const&            env) const {
      std::set<std::string> tv;
      detail::term_vars(t, tv);
      std::vector<std::string> mine;
      for (auto const& v : tv) {
        if (bound.count(v) != 0) {
          mine.push_back(v);
        }
      }
      if (mine.empty()) {
        return WordSet{eval_term(t, env)};
      }
      if (t.kind == Term::Kind::mul) {
        std::set<std::string> av, bv;
        detail::term_vars(*t.a, av);
        detail::term_vars(*t.b, bv);
        bool disjoint = true;
        for (auto const& v : av) {
          disjoint = disjoint && !(bound.count(v) && bv.count(v));
        }
        if (disjoint) {
          WordSet ai = image(*t.a, bound, env);
          WordSet bi = image(*t.b, bound, env);
          WordSet out;
          for (auto const& x : ai) {
            for (auto const& y : bi) {
              out.insert(_gp.multiply(x, y));
            }
          }
          return out;
        }
      }
      WordSet    out;
      Assignment local = env;
      enumerate_image(t, mine, 0, local, out);
      return out;
    }

    void enumerate_image(Term const&                     t,
                         std::vector<std::string> const& vars,
                         size_t                          i,
                         Assignment&                     env,
                         WordSet&                        out) const {
      if (i == vars.size()) {
        out.insert(eval_term(t, env));
        return;
      }
      for (auto const& w : _dom) {
        env[vars[i]] = w;
        enumerate_image(t, vars, i + 1, env, out);
      }
    }

    GraphProduct const& _gp;
    std::vector<Word>   _dom;
  };

  inline bool fo_eval(GraphProduct const& gp,
                      Formula const&      f,
                      Assignment const&   env,
                      size_t              radius) {
    return BoundedEvaluator(gp, gp.ball(radius)).eval(f, env);
  }

}  // namespace coxlab

#endif  // COXLAB_FORMULA_HPP_
