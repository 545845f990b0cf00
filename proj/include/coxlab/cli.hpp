#ifndef COXLAB_CLI_HPP_
#define COXLAB_CLI_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affine.hpp"
#include "endo.hpp"
#include "error.hpp"
#include "graph_product.hpp"
#include "linear.hpp"
#include "probes.hpp"
#include "raag.hpp"
#include "suites.hpp"
#include "system.hpp"
#include "tits.hpp"
#include "tree.hpp"
#include "walls.hpp"
#include "words.hpp"

namespace coxlab {

  using json = nlohmann::ordered_json;

  enum class Status { ok = 0, property_failed = 1, invalid_input = 2, inconclusive = 3 };

  inline char const* to_string(Status s) {
    switch (s) {
      case Status::ok:
        return "ok";
      case Status::property_failed:
        return "property-failed";
      case Status::invalid_input:
        return "invalid-input";
      default:
        return "inconclusive";
    }
  }

  struct CommandResult {
    Status      status = Status::ok;
    json        report = json::object();
    std::string text;
    double      seconds = 0;

    int exit_code() const noexcept {
      return static_cast<int>(status);
    }
  };

  namespace cli {

    struct Options {
      std::string              system;
      std::string              word, x, y, t, u, set, chamber, tuple, endo;
      std::string              graph;
      std::vector<std::string> type;
      std::optional<size_t>    radius;
      long                     order_cutoff = 0;
      std::string              format       = "text";
      uint64_t                 seed         = 1;
      size_t                   rank = 3, cap = 2, depth = 2, branch = 3;
      long                     prime = 5;
      size_t                   pairs = 500;
      std::string              suite;
    };

    inline std::string words_text(std::vector<Word> const& ws,
                                  std::function<std::string(Word const&)> fmt) {
      std::string out;
      for (auto const& w : ws) {
        out += (out.empty() ? "" : ", ") + fmt(w);
      }
      return "{" + out + "}";
    }

    // "a; b a b; c" -> three words
    inline std::vector<Word> parse_word_list(CoxeterSystem const& sys,
                                             std::string const&   text) {
      std::vector<Word> out;
      std::string       item;
      std::stringstream ss(text);
      while (std::getline(ss, item, ';')) {
        if (split_ws(item).empty()) {
          throw InvalidInput("empty entry in list '" + text + "'");
        }
        out.push_back(parse_coxeter_word(sys, item));
      }
      if (out.empty()) {
        throw InvalidInput("empty list");
      }
      return out;
    }

    inline void require(std::string const& v, std::string const& flag) {
      if (v.empty()) {
        throw InvalidInput(flag + " is required");
      }
    }

    class Runner {
     public:
      explicit Runner(Options const& o) : _o(o) {}

      CoxeterSystem const& sys() {
        if (!_sys) {
          require(_o.system, "--system");
          _sys = load_system(_o.system);
        }
        return *_sys;
      }

      bool right_angled() {
        return sys().right_angled();
      }

      Word word(std::string const& text, std::string const& flag) {
        require(text, flag);
        return parse_coxeter_word(sys(), text);
      }

      std::string fmt(Word const& w) {
        return format_word(w, sys().names());
      }

      Word normalize(Word const& w) {
        if (right_angled()) {
          return GraphProduct::racg(sys()).normalize(w);
        }
        return TitsEngine(sys()).normalize(w);
      }

      void base(CommandResult& r) {
        if (!_o.system.empty()) {
          r.report["system"] = _o.system;
        }
        r.report["seed"] = _o.seed;
      }

      ////////////////////////////////////////////////////////////////
      // word engine
      ////////////////////////////////////////////////////////////////

      CommandResult normalize_cmd() {
        CommandResult r;
        base(r);
        Word w  = word(_o.word, "--word");
        Word nf = normalize(w);
        r.report["engine"] = right_angled() ? "graph-product" : "tits";
        r.report["order"]  = "shortlex";
        r.report["input"]  = _o.word;
        r.report["normal_form"] = fmt(nf);
        r.report["length"]      = nf.size();
        r.text                  = fmt(nf);
        return r;
      }

      CommandResult mult_cmd() {
        CommandResult r;
        base(r);
        Word p = normalize(concat(word(_o.x, "--x"), word(_o.y, "--y")));
        r.report["product"] = fmt(p);
        r.report["length"]  = p.size();
        r.text              = fmt(p);
        return r;
      }

      CommandResult order_cmd() {
        CommandResult r;
        base(r);
        Word  w = word(_o.word, "--word");
        Order o;
        if (right_angled()) {
          o = element_order(GraphProduct::racg(sys()), w);
        } else {
          TitsEngine eng(sys());
          long cutoff = _o.order_cutoff > 0 ? _o.order_cutoff
                                            : eng.default_cutoff();
          o = eng.order(w, cutoff);
          r.report["order_cutoff"] = cutoff;
        }
        r.report["order"] = o.str();
        r.text            = o.str();
        if (o.kind == Order::Kind::unknown) {
          r.status = Status::inconclusive;
        }
        return r;
      }

      CommandResult centralizer_cmd() {
        CommandResult r;
        base(r);
        auto gp = GraphProduct::racg(sys());
        Word x  = word(_o.word, "--word");
        auto c  = centralizer_generators(gp, x);
        json roots = json::array();
        for (auto const& w : c.roots) {
          roots.push_back(gp.format(w));
        }
        json link = json::array();
        for (int v : c.link) {
          link.push_back(sys().name(static_cast<size_t>(v)));
        }
        auto gens = c.generators(gp);
        r.report["conjugator"] = gp.format(c.h);
        r.report["roots"]      = roots;
        r.report["link"]       = link;
        r.text = "generators " + words_text(gens, [&](Word const& w) {
                   return gp.format(w);
                 });
        if (_o.radius) {
          auto ball  = gp.ball(*_o.radius);
          auto brute = brute_force_centralizer(gp, x, ball);
          auto mine  = centralizer_in_ball(gp, c, *_o.radius);
          r.report["radius"]         = *_o.radius;
          r.report["ball_elements"]  = mine.size();
          r.report["matches_brute"]  = mine == brute;
          r.text += "\nin B_" + std::to_string(*_o.radius) + ": "
                    + std::to_string(mine.size()) + " elements, "
                    + (mine == brute ? "matches" : "differs from")
                    + " brute force";
          if (mine != brute) {
            r.status = Status::property_failed;
          }
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // walls
      ////////////////////////////////////////////////////////////////

      CommandResult dist_cmd() {
        CommandResult r;
        base(r);
        auto gp = GraphProduct::racg(sys());
        auto t  = make_reflection(gp, word(_o.t, "--t"));
        auto u  = make_reflection(gp, word(_o.u, "--u"));
        size_t d = wall_distance(gp, t, u);
        size_t R = _o.radius.value_or(t.gate.size() + u.gate.size() + 1);
        auto   b = wall_distance_bfs(gp, t, u, R);
        r.report["distance"] = d;
        r.report["bfs_radius"] = R;
        r.report["bfs_distance"] =
            b ? json(*b) : json(nullptr);
        r.text = std::to_string(d);
        if (!b) {
          r.status = Status::inconclusive;
        } else if (*b != d) {
          r.status = Status::property_failed;
        }
        return r;
      }

      CommandResult geom_check_cmd() {
        CommandResult r;
        base(r);
        auto gp  = GraphProduct::racg(sys());
        require(_o.set, "--set");
        auto T   = make_reflections(gp, parse_word_list(sys(), _o.set));
        auto rep = is_geometric_set(gp, T);
        r.report["geometric"] = rep.geometric;
        if (rep.failing) {
          auto [a, b, c] = *rep.failing;
          r.report["failing"] = {gp.format(T[static_cast<size_t>(a)].element),
                                 gp.format(T[static_cast<size_t>(b)].element),
                                 gp.format(T[static_cast<size_t>(c)].element)};
          r.text = "not geometric: ("
                   + r.report["failing"][0].get<std::string>() + ", "
                   + r.report["failing"][1].get<std::string>() + ", "
                   + r.report["failing"][2].get<std::string>() + ")";
          r.status = Status::property_failed;
        } else {
          r.text = "geometric";
        }
        return r;
      }

      CommandResult canon_gens_cmd() {
        CommandResult r;
        base(r);
        auto gp = GraphProduct::racg(sys());
        require(_o.set, "--set");
        auto T  = make_reflections(gp, parse_word_list(sys(), _o.set));
        Word c  = _o.chamber.empty() ? Word{} : word(_o.chamber, "--chamber");
        auto cg = canonical_generators(gp, T, c);
        std::vector<Word> R;
        json              arr = json::array();
        for (auto const& x : cg.R) {
          R.push_back(x.element);
          arr.push_back(gp.format(x.element));
        }
        r.report["chamber"]    = gp.format(gp.normalize(c));
        r.report["generators"] = arr;
        r.report["steps"]      = cg.steps;
        r.report["validated"]  = cg.validated;
        r.text = words_text(R, [&](Word const& w) { return gp.format(w); });
        if (!cg.validated) {
          r.status = Status::property_failed;
        }
        return r;
      }

      CommandResult refl_length_cmd() {
        CommandResult r;
        base(r);
        Word w   = word(_o.word, "--word");
        auto res = reflection_length(sys(), w, _o.radius);
        r.report["lower"]         = res.lower;
        r.report["upper"]         = res.upper ? json(*res.upper) : json(nullptr);
        r.report["exact"]         = res.exact;
        r.report["search_radius"] = res.search_radius;
        if (res.exact) {
          r.text = std::to_string(res.lower);
        } else {
          r.text = std::to_string(res.lower) + ".."
                   + (res.upper ? std::to_string(*res.upper) : "?")
                   + " (search radius "
                   + std::to_string(res.search_radius) + ")";
          r.status = Status::inconclusive;
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // endomorphisms
      ////////////////////////////////////////////////////////////////

      Endo endo() {
        require(_o.endo, "--endo");
        return load_endo(sys(), _o.endo);
      }

      CommandResult sim_check_cmd() {
        CommandResult r;
        base(r);
        Endo f   = endo();
        auto rep = sim_check(sys(), f);
        r.report["sim"]     = rep.is_sim;
        r.report["decided"] = rep.decided;
        r.report["failures"] = rep.failures;
        std::string kind = rep.is_sim ? "sim" : "not-sim";
        if (rep.is_sim && right_angled()) {
          kind = to_string(classify_endo(sys(), f).kind);
        }
        r.report["kind"] = kind;
        r.text           = kind;
        if (!rep.decided) {
          r.status = Status::inconclusive;
        } else if (!rep.is_sim) {
          r.status = Status::property_failed;
        }
        return r;
      }

      CommandResult delta_cmd() {
        CommandResult r;
        base(r);
        auto cm = complexity_matrix(sys(), endo());
        r.report["delta"] = cm.delta;
        json geo          = json::array();
        for (auto const& g : cm.geometrized) {
          geo.push_back(fmt(g.element));
        }
        r.report["geometrized"] = geo;
        r.report["entry_sum"]   = entry_sum(cm.delta);
        std::string text;
        for (auto const& row : cm.delta) {
          std::string line;
          for (size_t d : row) {
            line += (line.empty() ? "" : " ") + std::to_string(d);
          }
          text += line + "\n";
        }
        text.pop_back();
        r.text = text;
        return r;
      }

      CommandResult detp_cmd() {
        CommandResult r;
        r.report["seed"]  = _o.seed;
        r.report["rank"]  = _o.rank;
        r.report["prime"] = _o.prime;
        auto   u = universal_system(_o.rank);
        BigInt d = alpha_p_determinant(u, _o.prime);
        r.report["determinant"] = d.str();
        r.text                  = d.str();
        if (d != BigInt(_o.prime)) {
          r.status = Status::property_failed;
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // probes
      ////////////////////////////////////////////////////////////////

      CommandResult probe_phi() {
        CommandResult r;
        base(r);
        require(_o.tuple, "--tuple");
        auto tuple = parse_word_list(sys(), _o.tuple);
        auto rep   = phi_gamma_check(sys(), tuple);
        r.report["holds"] = rep.holds;
        if (!rep.holds) {
          r.report["failing_clause"] = std::string(1, rep.failing_clause);
          r.report["detail"]         = rep.detail;
          r.text = std::string("false, clause (") + rep.failing_clause
                   + "): " + rep.detail;
          r.status = Status::property_failed;
        } else {
          r.report["cores"] = rep.cores;
          r.text            = "true";
        }
        if (_o.radius) {
          auto gp = GraphProduct::racg(sys());
          std::set<std::string> free;
          Assignment            env;
          for (size_t i = 0; i < tuple.size(); ++i) {
            free.insert(detail::xv(i));
            env[detail::xv(i)] = gp.normalize(tuple[i]);
          }
          auto f = parse_formula(gp, phi_gamma_formula(sys()), free);
          bool b = fo_eval(gp, *f, env, *_o.radius);
          r.report["bounded"] = {{"radius", *_o.radius}, {"value", b}};
          r.text += "\nbounded at " + std::to_string(*_o.radius) + ": "
                    + (b ? "true" : "false");
        }
        return r;
      }

      CommandResult probe_psi() {
        CommandResult r;
        base(r);
        Word x  = word(_o.word, "--word");
        bool ok = psi_reflection_check(sys(), x);
        r.report["reflection"] = ok;
        r.text                 = ok ? "true" : "false";
        if (_o.radius) {
          bool b = psi_bounded(sys(), x, *_o.radius);
          r.report["bounded"] = {{"radius", *_o.radius}, {"value", b}};
          r.text += "\nbounded at " + std::to_string(*_o.radius) + ": "
                    + (b ? "true" : "false");
        }
        if (!ok) {
          r.status = Status::property_failed;
        }
        return r;
      }

      CommandResult probe_delta() {
        CommandResult r;
        base(r);
        require(_o.tuple, "--tuple");
        auto rep = delta_2spherical_check(sys(),
                                          parse_word_list(sys(), _o.tuple));
        r.report["holds"] = rep.holds;
        if (rep.holds) {
          r.text = "true";
        } else {
          r.report["failing_clause"] = rep.failing_clause;
          r.report["detail"]         = rep.detail;
          r.text = "false, clause (" + rep.failing_clause + "): " + rep.detail;
          r.status = Status::property_failed;
        }
        return r;
      }

      CommandResult probe_fc() {
        CommandResult r;
        base(r);
        size_t R  = _o.radius.value_or(4);
        auto   fc = finite_continuation(sys(), word(_o.word, "--word"), R);
        json   el = json::array();
        for (auto const& w : fc.elements) {
          el.push_back(fmt(w));
        }
        r.report["radius"]    = R;
        r.report["elements"]  = el;
        r.report["subgroups"] = fc.subgroups;
        r.text = words_text(fc.elements, [&](Word const& w) { return fmt(w); })
                 + " (radius " + std::to_string(R) + ")";
        return r;
      }

      CommandResult probe_domain() {
        CommandResult r;
        base(r);
        size_t R   = _o.radius.value_or(4);
        auto   rep = domain_check(sys(), word(_o.x, "--x"), word(_o.y, "--y"), R);
        r.report["radius"] = R;
        r.report["result"] = to_string(rep.status);
        r.report["reason"] = rep.reason;
        if (rep.status == DomainStatus::witness) {
          r.report["g"] = fmt(rep.g);
          r.text        = "witness " + fmt(rep.g);
        } else {
          r.text = std::string(to_string(rep.status)) + " (radius "
                   + std::to_string(R) + ")";
          if (!rep.reason.empty()) {
            r.text += ": " + rep.reason;
          }
          r.status = rep.status == DomainStatus::exhausted
                         ? Status::inconclusive
                         : Status::property_failed;
        }
        return r;
      }

      CommandResult probe_rigidity() {
        CommandResult r;
        base(r);
        Word h   = word(_o.word, "--word");
        auto rep = rigidity_check(sys(), h, _o.cap);
        r.report["cap"]                  = _o.cap;
        r.report["candidates"]           = rep.candidates;
        r.report["sims"]                 = rep.sims;
        r.report["automorphisms_fixing"] = rep.automorphisms_fixing;
        json proper                      = json::array();
        for (auto const& f : rep.proper_fixing) {
          json imgs = json::array();
          for (auto const& w : f.images) {
            imgs.push_back(fmt(w));
          }
          proper.push_back(imgs);
        }
        r.report["proper_fixing"] = proper;
        r.text = std::to_string(rep.proper_fixing.size())
                 + " proper sim(s) fix " + fmt(h) + " among "
                 + std::to_string(rep.sims) + " sims (cap "
                 + std::to_string(_o.cap) + ")";
        return r;
      }

      CommandResult probe_tree() {
        CommandResult r;
        r.report["seed"] = _o.seed;
        auto tw = unsuperstability_tree(_o.prime, _o.depth, _o.branch);
        r.report["n"]         = tw.n;
        r.report["depth"]     = tw.depth;
        r.report["branching"] = tw.branching;
        r.report["nodes"]     = tw.nodes.size();
        r.report["clauses"]   = {{"b1", tw.clause_b1},
                                 {"b2", tw.clause_b2},
                                 {"purity", tw.purity},
                                 {"e", tw.clause_e},
                                 {"f", tw.clause_f}};
        r.report["max_f"]     = tw.max_f;
        r.report["log"]       = tw.log;
        std::string text;
        for (auto const& l : tw.log) {
          text += l + "\n";
        }
        text += tw.ok() ? "all clauses verified" : "verification failed";
        r.text = text;
        if (!tw.ok()) {
          r.status = Status::property_failed;
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // affine models
      ////////////////////////////////////////////////////////////////

      AffineGroup group() {
        if (_o.type.empty()) {
          throw InvalidInput("--type is required");
        }
        if (_o.type[0] == "custom" && _o.type.size() != 2) {
          throw InvalidInput("--type custom needs a file");
        }
        return build_affine(_o.type[0], _o.type.size() > 1 ? _o.type[1] : "");
      }

      Word affine_word(AffineGroup const& g, std::string const& text,
                       std::string const& flag) {
        require(text, flag);
        return parse_coxeter_word(g.system(), text);
      }

      CommandResult affine_build() {
        CommandResult r;
        auto          g = group();
        r.report["type"]         = g.name();
        r.report["dim"]          = g.dim();
        r.report["finite_order"] = g.finite_order();
        json gens                = json::array();
        for (auto const& x : g.generators()) {
          gens.push_back(g.format(x));
        }
        r.report["generators"] = gens;
        r.report["validated"]  = true;
        r.text = g.name() + ": d=" + std::to_string(g.dim()) + ", |W0|="
                 + std::to_string(g.finite_order()) + ", relations verified";
        return r;
      }

      CommandResult affine_mult() {
        CommandResult r;
        auto          g = group();
        auto          x = g.from_word(affine_word(g, _o.x, "--x"));
        auto          y = g.from_word(affine_word(g, _o.y, "--y"));
        auto          p = g.multiply(x, y);
        r.report["product"] = g.format(p);
        r.report["order"]   = g.order(p).str();
        r.text              = g.format(p);
        return r;
      }

      CommandResult affine_epsilon() {
        CommandResult r;
        auto          g  = group();
        Word          w  = affine_word(g, _o.word, "--word");
        auto          ew = epsilon_of_word(w);
        auto          ee = epsilon_of_element(g, g.from_word(w));
        r.report["sign"]      = ew.sign;
        r.report["in_kernel"] = ew.in_kernel;
        r.report["det_sign"]  = ee.sign;
        r.text = std::to_string(ew.sign)
                 + (ew.in_kernel ? " (kernel)" : " (not in kernel)");
        if (ee.sign != ew.sign) {
          r.status = Status::property_failed;
        }
        if (_o.radius) {
          auto k = kernel_cosets(g, *_o.radius);
          r.report["cosets"] = {{"radius", *_o.radius},
                                {"count", k.cosets},
                                {"normal", k.normal}};
          r.text += "\nkernel cosets in B_" + std::to_string(*_o.radius)
                    + ": " + std::to_string(k.cosets);
        }
        return r;
      }

      CommandResult affine_refl_length() {
        CommandResult r;
        auto          g = group();
        if (_o.word.empty()) {
          size_t R   = _o.radius.value_or(6);
          auto   rep = involution_generation_check(g, R);
          r.report["radius"]     = R;
          r.report["covered"]    = rep.covered;
          r.report["max_length"] = rep.max_length;
          r.report["elements"]   = rep.elements;
          r.text = "max reflection length over B_" + std::to_string(R)
                   + ": " + std::to_string(rep.max_length);
          if (!rep.covered) {
            r.status = Status::inconclusive;
          }
          return r;
        }
        auto x   = g.from_word(affine_word(g, _o.word, "--word"));
        auto res = affine_reflection_length(g, x);
        r.report["lower"] = res.lower;
        r.report["exact"] = res.exact ? json(*res.exact) : json(nullptr);
        if (res.exact) {
          r.text = std::to_string(*res.exact);
        } else {
          r.text   = ">= " + std::to_string(res.lower);
          r.status = Status::inconclusive;
        }
        return r;
      }

      CommandResult affine_interp() {
        CommandResult         r;
        auto                  g = group();
        IntegerInterpretation interp(g);
        std::mt19937_64       rng(_o.seed);
        auto                  ball = g.ball(_o.radius.value_or(6));
        std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
        size_t                                bad = 0;
        for (size_t i = 0; i < _o.pairs; ++i) {
          auto const& x = ball[pick(rng)];
          auto const& y = ball[pick(rng)];
          if (interp.decode(interp.multiply(interp.encode(x), interp.encode(y)))
              != g.multiply(x, y)) {
            ++bad;
          }
        }
        for (auto const& x : ball) {
          bad += interp.decode(interp.encode(x)) == x ? 0 : 1;
        }
        r.report["seed"]        = _o.seed;
        r.report["pairs"]       = _o.pairs;
        r.report["mismatches"]  = bad;
        r.report["parameters"]  = interp.parameters();
        r.report["param_count"] = interp.parameter_count();
        r.text = std::to_string(_o.pairs) + " pairs, "
                 + std::to_string(bad) + " mismatches, "
                 + std::to_string(interp.parameter_count()) + " parameters";
        if (bad != 0) {
          r.status = Status::property_failed;
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // RAAG bridge
      ////////////////////////////////////////////////////////////////

      CommandResult raag_embed() {
        CommandResult r;
        require(_o.graph, "--graph");
        GammaPlus gp(load_graph(_o.graph));
        require(_o.word, "--word");
        Word a = gp.raag().parse(_o.word);
        Word b = gp.beta(a);
        r.report["graph"]     = _o.graph;
        r.report["raag_word"] = gp.raag().format(gp.raag().normalize(a));
        r.report["image"]     = gp.racg().format(b);
        r.report["in_kernel"] = gp.in_kernel(b);
        r.text                = gp.racg().format(b);
        return r;
      }

      CommandResult raag_index() {
        CommandResult r;
        require(_o.graph, "--graph");
        GammaPlus gp(load_graph(_o.graph));
        size_t    R    = _o.radius.value_or(2 * gp.size());
        size_t    got  = gp.coset_count(R);
        size_t    want = size_t{1} << gp.size();
        r.report["graph"]    = _o.graph;
        r.report["radius"]   = R;
        r.report["cosets"]   = got;
        r.report["expected"] = want;
        r.text = std::to_string(got);
        if (got != want) {
          r.status = Status::property_failed;
        }
        return r;
      }

      ////////////////////////////////////////////////////////////////
      // suites
      ////////////////////////////////////////////////////////////////

      CommandResult suite_cmd() {
        CommandResult r;
        r.report["suite"] = _o.suite;
        r.report["seed"]  = _o.seed;
        auto results      = run_suite(_o.suite, SuiteConfig{_o.seed});
        json checks       = json::array();
        std::string text;
        for (auto const& c : results) {
          checks.push_back({{"id", c.id},
                            {"name", c.name},
                            {"pass", c.pass},
                            {"limit_s", c.limit},
                            {"detail", c.detail}});
          text += std::string(c.pass ? "PASS" : "FAIL") + " ["
                  + std::to_string(c.id) + "] " + c.name + ": " + c.detail
                  + "\n";
          if (!c.pass) {
            r.status = Status::property_failed;
          }
        }
        r.report["checks"] = checks;
        text += "seed " + std::to_string(_o.seed);
        r.text = text;
        return r;
      }

     private:
      Options const&               _o;
      std::optional<CoxeterSystem> _sys;
    };

  }  // namespace cli

  inline CommandResult run_command(std::vector<std::string> const& args) {
    cli::Options o;
    CLI::App     app{"Coxeter group toolkit", "cox"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto common = [&](CLI::App* sub) {
      sub->add_option("--system", o.system, "system file (.cox)");
      sub->add_option("--radius", o.radius, "ball radius");
      sub->add_option("--order-cutoff", o.order_cutoff, "power cutoff");
      sub->add_option("--seed", o.seed, "random seed");
      sub->add_option("--format", o.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
      return sub;
    };

    auto* normalize = common(app.add_subcommand("normalize", "canonical form"));
    normalize->add_option("--word", o.word);
    auto* mult = common(app.add_subcommand("mult", "product x y"));
    mult->add_option("--x", o.x);
    mult->add_option("--y", o.y);
    auto* order = common(app.add_subcommand("order", "element order"));
    order->add_option("--word", o.word);
    auto* centralizer =
        common(app.add_subcommand("centralizer", "centralizer generators"));
    centralizer->add_option("--word", o.word);
    auto* dist = common(app.add_subcommand("dist", "wall distance"));
    dist->add_option("--t", o.t);
    dist->add_option("--u", o.u);
    auto* geom = common(app.add_subcommand("geom-check", "geometric set test"));
    geom->add_option("--set", o.set, "reflections separated by ';'");
    auto* canon =
        common(app.add_subcommand("canon-gens", "canonical generators"));
    canon->add_option("--set", o.set, "reflections separated by ';'");
    canon->add_option("--chamber", o.chamber);
    auto* simc = common(app.add_subcommand("sim-check", "self-similarity test"));
    simc->add_option("--endo", o.endo, "endomorphism file");
    auto* delta = common(app.add_subcommand("delta", "complexity matrix"));
    delta->add_option("--endo", o.endo, "endomorphism file");
    auto* detp = common(app.add_subcommand("detp", "determinant of alpha_p"));
    detp->add_option("--rank", o.rank);
    detp->add_option("--prime", o.prime);
    auto* refl = common(app.add_subcommand("refl-length", "reflection length"));
    refl->add_option("--word", o.word);

    auto* probe = app.add_subcommand("probe", "definability probes");
    probe->require_subcommand(1);
    auto* phi = common(probe->add_subcommand("phi", "basis tuple check"));
    phi->add_option("--tuple", o.tuple, "elements separated by ';'");
    auto* psi = common(probe->add_subcommand("psi", "reflection check"));
    psi->add_option("--word", o.word);
    auto* pdelta = common(probe->add_subcommand("delta", "2-spherical tuple"));
    pdelta->add_option("--tuple", o.tuple, "elements separated by ';'");
    auto* fc = common(probe->add_subcommand("fc", "finite continuation"));
    fc->add_option("--word", o.word);
    auto* domain = common(probe->add_subcommand("domain", "domain property"));
    domain->add_option("--x", o.x);
    domain->add_option("--y", o.y);
    auto* rigid = common(probe->add_subcommand("rigidity", "fixing sims"));
    rigid->add_option("--word", o.word);
    rigid->add_option("--cap", o.cap);
    auto* tree = common(probe->add_subcommand("tree", "witness tree"));
    tree->add_option("--prime", o.prime);
    tree->add_option("--depth", o.depth);
    tree->add_option("--branch", o.branch);

    auto* aff = app.add_subcommand("affine", "affine models");
    aff->require_subcommand(1);
    auto affine_sub = [&](char const* name, char const* desc) {
      auto* s = common(aff->add_subcommand(name, desc));
      s->add_option("--type", o.type, "A1~, A2~ or custom <file>")
          ->expected(1, 2);
      return s;
    };
    auto* abuild = affine_sub("build", "build and validate");
    auto* amult  = affine_sub("mult", "product of two words");
    amult->add_option("--x", o.x);
    amult->add_option("--y", o.y);
    auto* aeps = affine_sub("epsilon", "sign character");
    aeps->add_option("--word", o.word);
    auto* arefl = affine_sub("refl-length", "reflection length");
    arefl->add_option("--word", o.word);
    auto* ainterp = affine_sub("interp", "integer interpretation");
    ainterp->add_option("--pairs", o.pairs);

    auto* raag = app.add_subcommand("raag", "RAAG embedding");
    raag->require_subcommand(1);
    auto* embed = common(raag->add_subcommand("embed", "image of a word"));
    embed->add_option("--graph", o.graph);
    embed->add_option("--word", o.word);
    auto* index = common(raag->add_subcommand("index", "kernel index"));
    index->add_option("--graph", o.graph);

    auto* suite = common(app.add_subcommand("suite", "acceptance suites"));
    suite->add_option("name", o.suite)->required();

    CommandResult out;
    auto          t0 = std::chrono::steady_clock::now();
    try {
      std::vector<char const*> argv{"cox"};
      for (auto const& a : args) {
        argv.push_back(a.c_str());
      }
      app.parse(static_cast<int>(argv.size()), argv.data());
      cli::Runner run(o);
      auto        pick = [&]() -> CommandResult {
        if (normalize->parsed()) return run.normalize_cmd();
        if (mult->parsed()) return run.mult_cmd();
        if (order->parsed()) return run.order_cmd();
        if (centralizer->parsed()) return run.centralizer_cmd();
        if (dist->parsed()) return run.dist_cmd();
        if (geom->parsed()) return run.geom_check_cmd();
        if (canon->parsed()) return run.canon_gens_cmd();
        if (simc->parsed()) return run.sim_check_cmd();
        if (delta->parsed()) return run.delta_cmd();
        if (detp->parsed()) return run.detp_cmd();
        if (refl->parsed()) return run.refl_length_cmd();
        if (phi->parsed()) return run.probe_phi();
        if (psi->parsed()) return run.probe_psi();
        if (pdelta->parsed()) return run.probe_delta();
        if (fc->parsed()) return run.probe_fc();
        if (domain->parsed()) return run.probe_domain();
        if (rigid->parsed()) return run.probe_rigidity();
        if (tree->parsed()) return run.probe_tree();
        if (abuild->parsed()) return run.affine_build();
        if (amult->parsed()) return run.affine_mult();
        if (aeps->parsed()) return run.affine_epsilon();
        if (arefl->parsed()) return run.affine_refl_length();
        if (ainterp->parsed()) return run.affine_interp();
        if (embed->parsed()) return run.raag_embed();
        if (index->parsed()) return run.raag_index();
        return run.suite_cmd();
      };
      out = pick();
    } catch (CLI::CallForHelp const&) {
      out.text = app.help();
    } catch (CLI::ParseError const& e) {
      out.status = Status::invalid_input;
      out.text   = e.what();
    } catch (InvalidInput const& e) {
      out.status = Status::invalid_input;
      out.text   = std::string("invalid input: ") + e.what();
    } catch (Inconclusive const& e) {
      out.status = Status::inconclusive;
      out.text   = std::string("inconclusive: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (out.status == Status::invalid_input
        || (out.status == Status::inconclusive && out.report.empty())) {
      out.report["error"] = out.text;
    }
    out.report["status"]  = to_string(out.status);
    out.report["seconds"] = out.seconds;
    if (o.format == "json") {
      out.text = out.report.dump(2);
    }
    return out;
  }

}  // namespace coxlab

#endif  // COXLAB_CLI_HPP_
