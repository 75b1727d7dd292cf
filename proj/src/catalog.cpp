#include "checker_detail.hpp"

// The statement catalog. Each evaluator quantifies one statement over a
// single enumerated space (or one (domain, codomain, function) triple) in
// canonical order and reports the first violation, if any. The driver in
// checker.cpp supplies the streams.
//
// Accounting: n.work ticks once per classifier-scale evaluation, premise
// scans included, and is what the per-statement cap bounds; n.asserted
// ticks only when a conclusion is actually asserted, so hypotheses that
// never fire surface as a vacuous verdict.

namespace softtopo::detail {

namespace {

SoftSet mk(const SoftTopology& t, Mask m) { return SoftSet(t.universe(), m); }
std::string txt(const SoftTopology& t, Mask m) { return mk(t, m).to_text(); }
bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

bool hyperconnected(const SoftTopology& t) {
  const auto& opens = t.opens_masks();
  for (size_t i = 0; i < opens.size(); ++i) {
    if (opens[i] == 0) continue;
    for (size_t j = i + 1; j < opens.size(); ++j) {
      if (opens[j] != 0 && (opens[i] & opens[j]) == 0) return false;
    }
  }
  return true;
}

Mask pre_in(const TripleCtx& c, Mask v) {
  return c.fn.preimage_mask(v) & c.dom.carrier_mask();
}

// f viewed on the carrier of `sub`: sw-continuity over the carrier,
// sw-openness of the relative opens' images.
bool restriction_sw_continuous(const TripleCtx& c, const SoftTopology& sub, Counter& n) {
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    if (!sub.sw_open_mask(c.fn.preimage_mask(v) & sub.carrier_mask())) return false;
  }
  return true;
}

bool restriction_sw_open(const TripleCtx& c, const SoftTopology& sub, Counter& n) {
  for (Mask q : sub.opens_masks()) {
    ++n.work;
    if (!c.cod.sw_open_mask(c.fn.image_mask(q))) return false;
  }
  return true;
}

// --- set-level statements ---------------------------------------------------

// The null set is sw-open and the absolute set sw-closed by definition,
// yet their supersets/subsets are arbitrary; the statement is about the
// non-degenerate cases, where a witnessing open (closed) set transfers.
std::optional<WitnessData> eval_superset(const SoftTopology& t, SeparationMode, Counter& n) {
  const Mask full = t.carrier_mask();
  for (Mask g = 0; g <= full; ++g) {
    if (g != 0 && t.sw_open_mask(g)) {
      for (Mask h = 0; h <= full; ++h) {
        if (!subset(g, h)) continue;
        ++n.work;
        ++n.asserted;
        if (!t.sw_open_mask(h)) {
          return make_space_witness(
              t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
              "G = " + txt(t, g) + " is sw-open but its superset H = " + txt(t, h) +
                  " is not");
        }
      }
    }
    if (g != full && t.sw_closed_mask(g)) {
      for (Mask h = 0; h <= full; ++h) {
        if (!subset(h, g)) continue;
        ++n.work;
        ++n.asserted;
        if (!t.sw_closed_mask(h)) {
          return make_space_witness(
              t, {{"F", mk(t, g)}, {"H", mk(t, h)}},
              "F = " + txt(t, g) + " is sw-closed but its subset H = " + txt(t, h) +
                  " is not");
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_nbhd(const SoftTopology& t, SeparationMode, Counter& n) {
  for (Mask g = 1; g <= t.carrier_mask(); ++g) {
    const bool lhs = t.sw_open_mask(g);
    bool nbhd = false;  // some soft point sits in an open set inside g
    for (Mask o : t.opens_masks()) {
      ++n.work;
      if (o != 0 && subset(o, g)) {
        nbhd = true;
        break;
      }
    }
    ++n.asserted;
    if (lhs != nbhd) {
      return make_space_witness(t, {{"G", mk(t, g)}},
                                "G = " + txt(t, g) + ": sw-open = " +
                                    (lhs ? "true" : "false") +
                                    " but neighbourhood-of-a-soft-point = " +
                                    (nbhd ? "true" : "false"));
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_union(const SoftTopology& t, SeparationMode, Counter& n) {
  const Mask full = t.carrier_mask();
  for (Mask g = 0; g <= full; ++g) {
    for (Mask h = g; h <= full; ++h) {
      ++n.work;
      if (t.sw_open_mask(g) && t.sw_open_mask(h)) {
        ++n.asserted;
        if (!t.sw_open_mask(g | h)) {
          return make_space_witness(t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
                                    "G and H are sw-open but G | H = " + txt(t, g | h) +
                                        " is not");
        }
      }
      if (t.sw_closed_mask(g) && t.sw_closed_mask(h)) {
        ++n.asserted;
        if (!t.sw_closed_mask(g & h)) {
          return make_space_witness(t, {{"F", mk(t, g)}, {"K", mk(t, h)}},
                                    "F and K are sw-closed but F & K = " + txt(t, g & h) +
                                        " is not");
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_hyper_int(const SoftTopology& t, SeparationMode, Counter& n) {
  ++n.work;
  if (!hyperconnected(t)) return std::nullopt;
  const Mask full = t.carrier_mask();
  std::vector<SoftSet> sw_family;
  for (Mask g = 0; g <= full; ++g) {
    if (!t.sw_open_mask(g)) continue;
    sw_family.push_back(mk(t, g));
    for (Mask h = g; h <= full; ++h) {
      if (!t.sw_open_mask(h)) continue;
      ++n.work;
      ++n.asserted;
      if (!t.sw_open_mask(g & h)) {
        return make_space_witness(
            t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
            "the space is hyperconnected, G and H are sw-open, yet G & H = " +
                txt(t, g & h) + " is not");
      }
    }
  }
  ++n.work;
  ++n.asserted;
  if (auto v = validate_family(t.universe(), sw_family)) {
    return make_space_witness(t, {},
                              "the sw-open family of a hyperconnected space fails the "
                              "topology axioms: " +
                                  v->message);
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_dense_subspace(const SoftTopology& t, SeparationMode,
                                               Counter& n) {
  const Mask full = t.carrier_mask();
  for (Mask d = 1; d <= full; ++d) {
    ++n.work;
    if (!t.dense_mask(d)) continue;
    const SoftTopology sub = t.subspace(mk(t, d));
    for (Mask g = 0; g <= full; ++g) {
      ++n.work;
      if (!t.sw_open_mask(g)) continue;
      ++n.asserted;
      if (!sub.sw_open_mask(g & d)) {
        return make_space_witness(
            t, {{"G", mk(t, g)}, {"D", mk(t, d)}},
            "G is sw-open and D is dense, but G & D = " + txt(t, g & d) +
                " is not sw-open over D");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_open_subspace(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask y : t.opens_masks()) {
    if (y == 0) continue;
    const SoftTopology sub = t.subspace(mk(t, y));
    for (Mask g = 0; g <= y; ++g) {
      if (!subset(g, y)) continue;
      const bool over_sub = sub.sw_open_mask(g);
      const bool over_x = t.sw_open_mask(g);
      ++n.work;
      ++n.asserted;
      if (over_sub != over_x) {
        return make_space_witness(
            t, {{"Y", mk(t, y)}, {"G", mk(t, g)}},
            "Y is an open subspace and G <= Y, but sw-open over Y = " +
                std::string(over_sub ? "true" : "false") + " while sw-open over X = " +
                (over_x ? "true" : "false"));
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_semi_cl_ident(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    const bool semi = t.semiopen_mask(g);
    const bool ident = t.closure_mask(g) == t.closure_mask(t.interior_mask(g));
    ++n.work;
    ++n.asserted;
    if (semi != ident) {
      return make_space_witness(t, {{"G", mk(t, g)}},
                                "G = " + txt(t, g) + ": semiopen = " +
                                    (semi ? "true" : "false") + " but Cl(G)=Cl(Int(G)) = " +
                                    (ident ? "true" : "false"));
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_semi_nonnull_int(const SoftTopology& t, SeparationMode,
                                                 Counter& n) {
  for (Mask g = 1; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (!t.semiopen_mask(g)) continue;
    ++n.asserted;
    if (t.interior_mask(g) == 0) {
      return make_space_witness(
          t, {{"G", mk(t, g)}},
          "G = " + txt(t, g) + " is non-null and semiopen yet Int(G) is null");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_cl_open_int(const SoftTopology& t, SeparationMode,
                                            Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    for (Mask u : t.opens_masks()) {
      ++n.work;
      ++n.asserted;
      if (!subset(t.closure_mask(g) & u, t.closure_mask(g & u))) {
        return make_space_witness(t, {{"G", mk(t, g)}, {"U", mk(t, u)}},
                                  "Cl(G) & U is not contained in Cl(G & U) for G = " +
                                      txt(t, g) + ", U = " + txt(t, u));
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_open_semi(const SoftTopology& t, SeparationMode, Counter& n) {
  for (Mask g : t.opens_masks()) {
    for (Mask h = 0; h <= t.carrier_mask(); ++h) {
      ++n.work;
      if (!t.semiopen_mask(h)) continue;
      ++n.asserted;
      if (!t.semiopen_mask(g & h)) {
        return make_space_witness(t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
                                  "open G intersected with semiopen H gives " +
                                      txt(t, g & h) + ", which is not semiopen");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_open_semi_rel(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g : t.opens_masks()) {
    if (g == 0) continue;
    const SoftTopology sub = t.subspace(mk(t, g));
    for (Mask h = 0; h <= t.carrier_mask(); ++h) {
      ++n.work;
      if (!t.semiopen_mask(h)) continue;
      ++n.asserted;
      if (!sub.semiopen_mask(g & h)) {
        return make_space_witness(t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
                                  "open G intersected with semiopen H gives " +
                                      txt(t, g & h) + ", which is not semiopen over G");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_semi_iff_sw_int(const SoftTopology& t, SeparationMode,
                                                Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    const bool semi = t.semiopen_mask(g);
    bool all_sw = true;
    for (Mask u : t.opens_masks()) {
      ++n.work;
      if (!t.sw_open_mask(g & u)) {
        all_sw = false;
        break;
      }
    }
    ++n.asserted;
    if (semi != all_sw) {
      return make_space_witness(
          t, {{"G", mk(t, g)}},
          "G = " + txt(t, g) + ": semiopen = " + (semi ? "true" : "false") +
              " but (G & U sw-open for every open U) = " + (all_sw ? "true" : "false"));
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_semiclosed_sd(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (!t.semiclosed_mask(g) || !t.somewhere_dense_mask(g)) continue;
    ++n.asserted;
    if (!t.sw_open_mask(g)) {
      return make_space_witness(
          t, {{"F", mk(t, g)}},
          "F = " + txt(t, g) + " is semiclosed and somewhere dense yet not sw-open");
    }
  }
  return std::nullopt;
}

// --- function-level statements ----------------------------------------------

std::optional<WitnessData> eval_p4_equiv(const TripleCtx& c, Counter& n) {
  const Mask dom_full = c.dom.carrier_mask();
  const Mask cod_full = c.cod.carrier_mask();

  bool c1 = true;
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    if (!c.dom.sw_open_mask(pre_in(c, v))) {
      c1 = false;
      break;
    }
  }
  bool c2 = true;
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    if (!c.dom.sw_closed_mask(pre_in(c, c.cod.rel_complement(v)))) {
      c2 = false;
      break;
    }
  }
  bool c3 = true;
  for (Mask g = 0; g <= dom_full; ++g) {
    ++n.work;
    if (!subset(c.fn.image_mask(c.dom.cl_sw_mask(g)),
                c.cod.closure_mask(c.fn.image_mask(g)))) {
      c3 = false;
      break;
    }
  }
  bool c4 = true;
  for (Mask h = 0; h <= cod_full; ++h) {
    ++n.work;
    if (!subset(c.dom.cl_sw_mask(pre_in(c, h)), pre_in(c, c.cod.closure_mask(h)))) {
      c4 = false;
      break;
    }
  }
  bool c5 = true;
  for (Mask h = 0; h <= cod_full; ++h) {
    ++n.work;
    if (!subset(pre_in(c, c.cod.interior_mask(h)), c.dom.int_sw_mask(pre_in(c, h)))) {
      c5 = false;
      break;
    }
  }
  ++n.asserted;
  if (c1 != c2 || c1 != c3 || c1 != c4 || c1 != c5) {
    auto b = [](bool x) { return x ? "T" : "F"; };
    return make_triple_witness(c, {}, {},
                               std::string("sw-continuity characterizations disagree: "
                                           "(1)=") +
                                   b(c1) + " (2)=" + b(c2) + " (3)=" + b(c3) +
                                   " (4)=" + b(c4) + " (5)=" + b(c5) + " for " +
                                   fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_dense_restrict(const TripleCtx& c, Counter& n) {
  if (!is_sw_continuous(c.dom, c.cod, c.fn, n)) return std::nullopt;
  const Mask full = c.dom.carrier_mask();
  for (Mask d = 1; d <= full; ++d) {
    ++n.work;
    if (!c.dom.dense_mask(d)) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), d));
    const bool ok = restriction_sw_continuous(c, sub, n);
    ++n.asserted;
    if (!ok) {
      return make_triple_witness(
          c, {{"D", SoftSet(c.dom.universe(), d)}}, {},
          "f is sw-continuous and D is dense, but f|_D is not sw-continuous over D (" +
              fn_text(c.fn) + ")");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_cover_glue(const TripleCtx& c, Counter& n) {
  // A cover with every restriction sw-continuous exists iff the union of
  // all "good" non-null opens is the whole space.
  Mask good = 0;
  for (Mask u : c.dom.opens_masks()) {
    if (u == 0) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), u));
    if (restriction_sw_continuous(c, sub, n)) good |= u;
  }
  if (good != c.dom.carrier_mask()) return std::nullopt;
  ++n.asserted;
  if (!is_sw_continuous(c.dom, c.cod, c.fn, n)) {
    return make_triple_witness(c, {}, {},
                               "the good opens cover the space yet f is not "
                               "sw-continuous (" +
                                   fn_text(c.fn) + ")");
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_extension(const TripleCtx& c, Counter& n) {
  for (Mask w : c.dom.opens_masks()) {
    if (w == 0) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), w));
    if (!restriction_sw_continuous(c, sub, n)) continue;
    ++n.work;
    if (c.cod.closure_mask(c.fn.image_mask(w)) != c.cod.carrier_mask()) continue;
    for (const auto& g : extensions_of(c.fn, w)) {
      const bool ok = is_sw_continuous(c.dom, c.cod, g, n);
      ++n.asserted;
      if (!ok) {
        return make_triple_witness(
            c, {{"W", SoftSet(c.dom.universe(), w)}}, {},
            "f|_W is sw-continuous with dense image, yet the extension (" + fn_text(g) +
                ") is not sw-continuous");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_semi_iff_restrict(const TripleCtx& c, Counter& n) {
  bool semicont = true;
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    if (!c.dom.semiopen_mask(pre_in(c, v))) {
      semicont = false;
      break;
    }
  }
  bool all_restrictions = true;
  for (Mask u : c.dom.opens_masks()) {
    if (u == 0) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), u));
    if (!restriction_sw_continuous(c, sub, n)) {
      all_restrictions = false;
      break;
    }
  }
  ++n.asserted;
  if (semicont != all_restrictions) {
    return make_triple_witness(
        c, {}, {},
        std::string("semicontinuous = ") + (semicont ? "true" : "false") +
            " but (every open restriction sw-continuous) = " +
            (all_restrictions ? "true" : "false") + " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t4_char(const TripleCtx& c, Counter& n) {
  const bool c1 = is_sw_continuous(c.dom, c.cod, c.fn, n);

  bool c2 = true;
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    const Mask pre = pre_in(c, v);
    if (pre == 0) continue;
    bool has = false;
    for (Mask u : c.dom.opens_masks()) {
      if (u != 0 && subset(u, pre)) {
        has = true;
        break;
      }
    }
    if (!has) {
      c2 = false;
      break;
    }
  }

  bool c3 = true;
  for (Mask v : c.cod.opens_masks()) {
    ++n.work;
    const Mask pre = pre_in(c, c.cod.rel_complement(v));
    if (pre == c.dom.carrier_mask()) continue;
    bool has = false;  // a proper closed superset exists iff some non-null open misses pre
    for (Mask u : c.dom.opens_masks()) {
      if (u != 0 && (u & pre) == 0) {
        has = true;
        break;
      }
    }
    if (!has) {
      c3 = false;
      break;
    }
  }

  bool c4 = true;
  const Mask fx = c.fn.image_mask(c.dom.carrier_mask());
  const SoftTopology over_fx = c.cod.subspace(SoftSet(c.cod.universe(), fx));
  for (Mask d = 1; d <= c.dom.carrier_mask(); ++d) {
    ++n.work;
    if (!c.dom.dense_mask(d)) continue;
    if (over_fx.closure_mask(c.fn.image_mask(d)) != fx) {
      c4 = false;
      break;
    }
  }

  ++n.asserted;
  if (c1 != c2 || c1 != c3 || c1 != c4) {
    auto b = [](bool x) { return x ? "T" : "F"; };
    return make_triple_witness(c, {}, {},
                               std::string("sw-continuity characterizations disagree: "
                                           "(1)=") +
                                   b(c1) + " (2)=" + b(c2) + " (3)=" + b(c3) +
                                   " (4)=" + b(c4) + " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_codense(const TripleCtx& c, Counter& n) {
  ++n.work;
  if (!c.fn.bijective()) return std::nullopt;
  const bool lhs = is_sw_continuous(c.dom, c.cod, c.fn, n);
  bool rhs = true;
  for (Mask g = 0; g <= c.dom.carrier_mask(); ++g) {
    ++n.work;
    if (c.dom.interior_mask(g) != 0) continue;  // not co-dense
    if (c.cod.interior_mask(c.fn.image_mask(g)) != 0) {
      rhs = false;
      break;
    }
  }
  ++n.asserted;
  if (lhs != rhs) {
    return make_triple_witness(
        c, {}, {},
        std::string("bijection: sw-continuous = ") + (lhs ? "true" : "false") +
            " but (co-dense images stay co-dense) = " + (rhs ? "true" : "false") +
            " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t4_hyper(const TripleCtx& c, Counter& n) {
  ++n.work;
  if (!c.fn.surjective()) return std::nullopt;
  if (!hyperconnected(c.dom)) return std::nullopt;
  if (!is_sw_continuous(c.dom, c.cod, c.fn, n)) return std::nullopt;
  ++n.asserted;
  if (!hyperconnected(c.cod)) {
    return make_triple_witness(c, {}, {},
                               "sw-continuous surjection from a hyperconnected space "
                               "onto a non-hyperconnected one (" +
                                   fn_text(c.fn) + ")");
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_p5_equiv(const TripleCtx& c, Counter& n) {
  const bool o1 = is_sw_open_map(c.dom, c.cod, c.fn, n);
  bool o2 = true;
  for (Mask g = 0; g <= c.dom.carrier_mask(); ++g) {
    ++n.work;
    if (!subset(c.fn.image_mask(c.dom.interior_mask(g)),
                c.cod.int_sw_mask(c.fn.image_mask(g)))) {
      o2 = false;
      break;
    }
  }
  bool o3 = true;
  for (Mask h = 0; h <= c.cod.carrier_mask(); ++h) {
    ++n.work;
    if (!subset(pre_in(c, c.cod.cl_sw_mask(h)), c.dom.closure_mask(pre_in(c, h)))) {
      o3 = false;
      break;
    }
  }
  ++n.asserted;
  if (o1 != o2 || o1 != o3) {
    auto b = [](bool x) { return x ? "T" : "F"; };
    return make_triple_witness(
        c, {}, {},
        std::string("sw-openness characterizations disagree: (1)=") + b(o1) +
            " (2)=" + b(o2) + " (3)=" + b(o3) + " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t5_open_restrict(const TripleCtx& c, Counter& n) {
  if (!is_sw_open_map(c.dom, c.cod, c.fn, n)) return std::nullopt;
  for (Mask g : c.dom.opens_masks()) {
    if (g == 0) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), g));
    const bool ok = restriction_sw_open(c, sub, n);
    ++n.asserted;
    if (!ok) {
      return make_triple_witness(
          c, {{"G", SoftSet(c.dom.universe(), g)}}, {},
          "f is sw-open yet f|_G is not sw-open over the open subspace G (" +
              fn_text(c.fn) + ")");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t5_dense_ext(const TripleCtx& c, Counter& n) {
  for (Mask d = 1; d <= c.dom.carrier_mask(); ++d) {
    ++n.work;
    if (!c.dom.dense_mask(d)) continue;
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), d));
    if (!restriction_sw_open(c, sub, n)) continue;
    for (const auto& g : extensions_of(c.fn, d)) {
      const bool ok = is_sw_open_map(c.dom, c.cod, g, n);
      ++n.asserted;
      if (!ok) {
        return make_triple_witness(
            c, {{"D", SoftSet(c.dom.universe(), d)}}, {},
            "f|_D is sw-open on the dense carrier D, yet the extension (" + fn_text(g) +
                ") is not sw-open");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t5_cover_glue(const TripleCtx& c, Counter& n) {
  Mask good = 0;
  for (Mask carrier = 1; carrier <= c.dom.carrier_mask(); ++carrier) {
    const SoftTopology sub = c.dom.subspace(SoftSet(c.dom.universe(), carrier));
    if (restriction_sw_open(c, sub, n)) good |= carrier;
    if (good == c.dom.carrier_mask()) break;
  }
  if (good != c.dom.carrier_mask()) return std::nullopt;
  ++n.asserted;
  if (!is_sw_open_map(c.dom, c.cod, c.fn, n)) {
    return make_triple_witness(c, {}, {},
                               "the good carriers cover the space yet f is not sw-open (" +
                                   fn_text(c.fn) + ")");
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t5_char_closed(const TripleCtx& c, Counter& n) {
  ++n.work;
  if (!c.fn.bijective()) return std::nullopt;
  const bool lhs = is_sw_open_map(c.dom, c.cod, c.fn, n);
  bool rhs = true;
  for (Mask u : c.dom.opens_masks()) {
    ++n.work;
    const Mask im = c.fn.image_mask(c.dom.rel_complement(u));
    if (im == c.cod.carrier_mask()) continue;
    bool has = false;
    for (Mask o : c.cod.opens_masks()) {
      if (o != 0 && (o & im) == 0) {
        has = true;
        break;
      }
    }
    if (!has) {
      rhs = false;
      break;
    }
  }
  ++n.asserted;
  if (lhs != rhs) {
    return make_triple_witness(
        c, {}, {},
        std::string("bijection: sw-open = ") + (lhs ? "true" : "false") +
            " but (proper closed images have proper closed supersets) = " +
            (rhs ? "true" : "false") + " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

std::optional<WitnessData> eval_t5_char_dense(const TripleCtx& c, Counter& n) {
  ++n.work;
  if (!c.fn.surjective()) return std::nullopt;
  const bool lhs = is_sw_open_map(c.dom, c.cod, c.fn, n);
  bool rhs = true;
  for (Mask d = 0; d <= c.cod.carrier_mask(); ++d) {
    ++n.work;
    if (!c.cod.dense_mask(d)) continue;
    if (c.dom.closure_mask(pre_in(c, d)) != c.dom.carrier_mask()) {
      rhs = false;
      break;
    }
  }
  ++n.asserted;
  if (lhs != rhs) {
    return make_triple_witness(
        c, {}, {},
        std::string("surjection: sw-open = ") + (lhs ? "true" : "false") +
            " but (preimages of dense sets are dense) = " + (rhs ? "true" : "false") +
            " for " + fn_text(c.fn));
  }
  return std::nullopt;
}

// --- strictness searches ------------------------------------------------------

std::optional<WitnessData> search_sw_not_semi(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (t.sw_open_mask(g) && !t.semiopen_mask(g)) {
      return make_space_witness(t, {{"G", mk(t, g)}},
                                "G = " + txt(t, g) + " has Int(G) = " +
                                    txt(t, t.interior_mask(g)) +
                                    " (non-null, so sw-open) but Cl(Int(G)) = " +
                                    txt(t, t.closure_mask(t.interior_mask(g))) +
                                    " does not contain G (not semiopen)");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> search_sd_not_sw(const SoftTopology& t, SeparationMode,
                                            Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (t.somewhere_dense_mask(g) && !t.sw_open_mask(g)) {
      return make_space_witness(
          t, {{"G", mk(t, g)}},
          "G = " + txt(t, g) + " has Int(Cl(G)) = " +
              txt(t, t.interior_mask(t.closure_mask(g))) +
              " (somewhere dense) but Int(G) is null and G is non-null (not sw-open)");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> search_beta_not_sw(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (t.beta_open_mask(g) && !t.sw_open_mask(g)) {
      return make_space_witness(
          t, {{"G", mk(t, g)}},
          "G = " + txt(t, g) + " lies inside Cl(Int(Cl(G))) = " +
              txt(t, t.closure_mask(t.interior_mask(t.closure_mask(g)))) +
              " (beta-open) but Int(G) is null and G is non-null (not sw-open)");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> search_sw_not_beta(const SoftTopology& t, SeparationMode,
                                              Counter& n) {
  for (Mask g = 0; g <= t.carrier_mask(); ++g) {
    ++n.work;
    if (t.sw_open_mask(g) && !t.beta_open_mask(g)) {
      return make_space_witness(
          t, {{"G", mk(t, g)}},
          "G = " + txt(t, g) + " has Int(G) = " + txt(t, t.interior_mask(g)) +
              " (non-null, so sw-open) but Cl(Int(Cl(G))) = " +
              txt(t, t.closure_mask(t.interior_mask(t.closure_mask(g)))) +
              " does not contain G (not beta-open)");
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> search_intersect_not_sw(const SoftTopology& t, SeparationMode,
                                                   Counter& n) {
  const Mask full = t.carrier_mask();
  for (Mask g = 0; g <= full; ++g) {
    if (!t.sw_open_mask(g)) continue;
    for (Mask h = g; h <= full; ++h) {
      ++n.work;
      if (!t.sw_open_mask(h)) continue;
      if (!t.sw_open_mask(g & h)) {
        return make_space_witness(t, {{"G", mk(t, g)}, {"H", mk(t, h)}},
                                  "G and H are sw-open but G & H = " + txt(t, g & h) +
                                      " is non-null with null interior");
      }
    }
  }
  return std::nullopt;
}

std::optional<WitnessData> search_swhomeo_not_t0(const TripleCtx& c, Counter& n) {
  ++n.work;
  if (!c.fn.bijective()) return std::nullopt;
  if (!c.dom.properties(c.separation).t0) return std::nullopt;
  ++n.work;
  if (!c.cod.properties(c.separation).t0 && is_sw_continuous(c.dom, c.cod, c.fn, n) &&
      is_sw_open_map(c.dom, c.cod, c.fn, n)) {
    const auto dp = c.dom.properties(c.separation);
    const auto cp = c.cod.properties(c.separation);
    auto b = [](bool x) { return x ? "true" : "false"; };
    return make_triple_witness(
        c, {}, {},
        "sw-homeomorphism (" + fn_text(c.fn) + "); domain separation t0/t1/t2 = " +
            b(dp.t0) + "/" + b(dp.t1) + "/" + b(dp.t2) +
            ", codomain separation t0/t1/t2 = " + b(cp.t0) + "/" + b(cp.t1) + "/" +
            b(cp.t2));
  }
  return std::nullopt;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  using Kind = CatalogEntry::Kind;
  static const std::vector<CatalogEntry> entries = {
      {PropId::P3_SUPERSET, "P3_SUPERSET",
       "every superset of an sw-open set is sw-open; every subset of an sw-closed set is "
       "sw-closed",
       Kind::Space, eval_superset},
      {PropId::P3_NBHD, "P3_NBHD",
       "a non-null set is sw-open iff it is a neighbourhood of some soft point",
       Kind::Space, eval_nbhd},
      {PropId::P3_UNION, "P3_UNION",
       "unions of sw-open sets are sw-open; intersections of sw-closed sets are sw-closed",
       Kind::Space, eval_union},
      {PropId::P3_HYPER_INT, "P3_HYPER_INT",
       "in a hyperconnected space the sw-open sets are closed under intersection and form "
       "a soft topology",
       Kind::Space, eval_hyper_int},
      {PropId::L3_DENSE_SUBSPACE, "L3_DENSE_SUBSPACE",
       "the trace of an sw-open set on a dense set D is sw-open over D", Kind::Space,
       eval_dense_subspace},
      {PropId::L3_OPEN_SUBSPACE, "L3_OPEN_SUBSPACE",
       "inside an open subspace Y, sw-open over Y and sw-open over X agree", Kind::Space,
       eval_open_subspace},
      {PropId::L3_SEMI_CL_IDENT, "L3_SEMI_CL_IDENT",
       "a set is semiopen iff Cl(G) = Cl(Int(G))", Kind::Space, eval_semi_cl_ident},
      {PropId::L3_SEMI_NONNULL_INT, "L3_SEMI_NONNULL_INT",
       "a non-null semiopen set has non-null interior", Kind::Space,
       eval_semi_nonnull_int},
      {PropId::L3_CL_OPEN_INT, "L3_CL_OPEN_INT",
       "Cl(G) & U is contained in Cl(G & U) for every open U", Kind::Space,
       eval_cl_open_int},
      {PropId::L3_OPEN_SEMI, "L3_OPEN_SEMI",
       "the intersection of an open set with a semiopen set is semiopen", Kind::Space,
       eval_open_semi},
      {PropId::L3_OPEN_SEMI_REL, "L3_OPEN_SEMI_REL",
       "the intersection of an open set G with a semiopen set is semiopen over G",
       Kind::Space, eval_open_semi_rel},
      {PropId::L3_SEMI_IFF_SW_INT, "L3_SEMI_IFF_SW_INT",
       "a set is semiopen iff its intersection with every open set is sw-open",
       Kind::Space, eval_semi_iff_sw_int},
      {PropId::L3_SEMICLOSED_SD, "L3_SEMICLOSED_SD",
       "a semiclosed somewhere dense set is sw-open", Kind::Space, eval_semiclosed_sd},
      {PropId::P4_EQUIV, "P4_EQUIV",
       "the five characterizations of sw-continuity agree", Kind::Triple, nullptr,
       eval_p4_equiv},
      {PropId::T4_DENSE_RESTRICT, "T4_DENSE_RESTRICT",
       "restricting an sw-continuous function to a dense set keeps it sw-continuous over "
       "that set",
       Kind::Triple, nullptr, eval_dense_restrict},
      {PropId::T4_COVER_GLUE, "T4_COVER_GLUE",
       "a function is sw-continuous when its restrictions to the members of some open "
       "cover all are",
       Kind::Triple, nullptr, eval_cover_glue},
      {PropId::T4_EXTENSION, "T4_EXTENSION",
       "every extension of an sw-continuous function on an open set with dense image is "
       "sw-continuous",
       Kind::Triple, nullptr, eval_extension},
      {PropId::T4_SEMI_IFF_RESTRICT, "T4_SEMI_IFF_RESTRICT",
       "a function is semicontinuous iff each restriction to an open set is sw-continuous "
       "over it",
       Kind::Triple, nullptr, eval_semi_iff_restrict},
      {PropId::T4_CHAR, "T4_CHAR",
       "the characterizations of sw-continuity via opens, closed sets and dense images "
       "agree",
       Kind::Triple, nullptr, eval_t4_char},
      {PropId::C4_CODENSE, "C4_CODENSE",
       "a bijection is sw-continuous iff images of co-dense sets are co-dense",
       Kind::Triple, nullptr, eval_codense},
      {PropId::T4_SEPARABLE_VACUOUS, "T4_SEPARABLE_VACUOUS",
       "sw-continuous surjections preserve separability (vacuous: every finite space is "
       "separable)",
       Kind::VacuousProp},
      {PropId::T4_HYPER, "T4_HYPER",
       "sw-continuous surjections preserve hyperconnectedness", Kind::Triple, nullptr,
       eval_t4_hyper},
      {PropId::P5_EQUIV, "P5_EQUIV", "the three characterizations of sw-openness agree",
       Kind::Triple, nullptr, eval_p5_equiv},
      {PropId::T5_OPEN_RESTRICT, "T5_OPEN_RESTRICT",
       "restricting an sw-open function to an open subspace keeps it sw-open",
       Kind::Triple, nullptr, eval_t5_open_restrict},
      {PropId::T5_DENSE_EXT, "T5_DENSE_EXT",
       "every extension of an sw-open function on a dense carrier is sw-open",
       Kind::Triple, nullptr, eval_t5_dense_ext},
      {PropId::T5_COVER_GLUE, "T5_COVER_GLUE",
       "a function is sw-open when its restrictions to the members of some cover all are",
       Kind::Triple, nullptr, eval_t5_cover_glue},
      {PropId::T5_CHAR_CLOSED, "T5_CHAR_CLOSED",
       "a bijection is sw-open iff every closed set with proper image has a proper closed "
       "superset of that image",
       Kind::Triple, nullptr, eval_t5_char_closed},
      {PropId::T5_CHAR_DENSE, "T5_CHAR_DENSE",
       "a surjection is sw-open iff preimages of dense sets are dense", Kind::Triple,
       nullptr, eval_t5_char_dense},
      {PropId::SW_NOT_SEMI, "SW_NOT_SEMI", "find an sw-open set that is not semiopen",
       Kind::SearchSpace, search_sw_not_semi},
      {PropId::SD_NOT_SW, "SD_NOT_SW", "find a somewhere dense set that is not sw-open",
       Kind::SearchSpace, search_sd_not_sw},
      {PropId::BETA_NOT_SW, "BETA_NOT_SW", "find a beta-open set that is not sw-open",
       Kind::SearchSpace, search_beta_not_sw},
      {PropId::SW_NOT_BETA, "SW_NOT_BETA", "find an sw-open set that is not beta-open",
       Kind::SearchSpace, search_sw_not_beta},
      {PropId::INTERSECT_NOT_SW, "INTERSECT_NOT_SW",
       "find two sw-open sets whose intersection is not sw-open", Kind::SearchSpace,
       search_intersect_not_sw},
      {PropId::SWHOMEO_NOT_T0, "SWHOMEO_NOT_T0",
       "find an sw-homeomorphism from a T0 space onto a space that is not T0",
       Kind::SearchTriple, nullptr, search_swhomeo_not_t0, /*bijective_only=*/true,
       /*same_shape_only=*/true},
  };
  return entries;
}

const CatalogEntry& catalog_entry(PropId id) {
  const auto& entries = catalog_entries();
  return entries.at(static_cast<size_t>(id));
}

}  // namespace softtopo::detail
