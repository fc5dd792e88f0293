// Copyright 2026 The qecv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "corpus_internal.hpp"
#include "qecv/decoder.hpp"
#include "qecv/error.hpp"

// Distance-3 surface-code layouts. Data qubits sit at lattice points (r, c)
// with r + c even; X faces are centred at odd r, Z stars at even r. Each
// layout is numbered as printed, row-major unless noted.

namespace qecv {

using namespace corpus_detail;

namespace {

using Coord = std::pair<int, int>;

class Patch {
 public:
  /// Rows as (r, columns); labels are assigned row-major from `first`.
  explicit Patch(const std::vector<std::pair<int, std::vector<int>>> &rows, Qubit first = 0) {
    Qubit next = first;
    for (const auto &[r, cols] : rows) {
      for (int c : cols) label_[{r, c}] = next++;
    }
  }
  Patch() = default;

  void pin(Coord at, Qubit label) { label_[at] = label; }
  /// Labels every unlabelled point of the rectangle row-major from `first`.
  void fill(int rows, int cols, Qubit first) {
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if ((r + c) % 2 == 0 && !label_.count({r, c})) label_[{r, c}] = first++;
      }
    }
  }

  int size() const { return static_cast<int>(label_.size()); }
  Qubit at(int r, int c) const { return label_.at({r, c}); }

  /// Letter l on every data qubit adjacent to (r, c).
  SignedPauli plaquette(Letter l, int r, int c) const {
    std::vector<Qubit> qs;
    for (Coord n : {Coord{r - 1, c}, Coord{r, c - 1}, Coord{r, c + 1}, Coord{r + 1, c}}) {
      if (auto it = label_.find(n); it != label_.end()) qs.push_back(it->second);
    }
    std::sort(qs.begin(), qs.end());
    return SignedPauli::uniform(l, qs);
  }
  SignedPauli face(int r, int c) const { return plaquette(Letter::X, r, c); }
  SignedPauli star(int r, int c) const { return plaquette(Letter::Z, r, c); }

  /// Faces (odd rows) then stars (even rows) of weight >= 2 whose centres
  /// lie in [r0, r1] x [c0, c1], minus `skip`, each group row-major.
  std::vector<SignedPauli> stabilizers(int r0, int r1, int c0, int c1,
                                       const std::set<Coord> &skip) const {
    std::vector<SignedPauli> faces, stars;
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        if ((r + c) % 2 == 0 || skip.count({r, c})) continue;
        const auto p = r % 2 != 0 ? face(r, c) : star(r, c);
        if (p.weight() < 2) continue;
        (r % 2 != 0 ? faces : stars).push_back(p);
      }
    }
    faces.insert(faces.end(), stars.begin(), stars.end());
    return faces;
  }

 private:
  std::map<Coord, Qubit> label_;
};

SignedPauli P(const std::string &s) { return parse_pauli(s); }

std::string neg(const SignedPauli &p) { return to_string(p.negated()); }

/// Remaining elements of `all` after removing `drop`, order kept.
std::vector<SignedPauli> without(const std::vector<SignedPauli> &all,
                                 const std::vector<SignedPauli> &drop) {
  std::vector<SignedPauli> out;
  for (const auto &p : all) {
    if (std::find(drop.begin(), drop.end(), p) == drop.end()) out.push_back(p);
  }
  return out;
}

/// `front` first, then the rest of `all`.
std::vector<SignedPauli> ordered(const std::vector<SignedPauli> &front,
                                 const std::vector<SignedPauli> &all) {
  auto out = front;
  for (const auto &p : without(all, front)) out.push_back(p);
  return out;
}

std::vector<std::string> vars_for(const std::vector<SignedPauli> &stabs) {
  return svar_names(0, static_cast<int>(stabs.size()));
}

// ---------------------------------------------------------------------------
// 17-qubit X-cut patch: defects X0X1X2X4 and X13X14X15X16, Z_L = Z4Z9Z13.

Patch patch17() {
  return Patch({{0, {2}}, {1, {1, 3}}, {2, {0, 2, 4}}, {3, {1, 3}}, {4, {0, 2, 4}},
                {5, {1, 3}}, {6, {2}}, {7, {1, 3}}, {8, {2}}});
}

// Corner weight-2 faces that meet a weight-2 or weight-3 star on one qubit
// are left out.
std::vector<SignedPauli> code17() {
  return patch17().stabilizers(-1, 9, -2, 6, {{1, 0}, {1, 4}, {5, 0}, {5, 4}});
}

const SignedPauli kXL17 = P("X0*X1*X2*X4");
const SignedPauli kXD17 = P("X13*X14*X15*X16");

std::vector<SignedPauli> active17() { return without(code17(), {kXL17, kXD17}); }

CaseStudy init_plus() {
  const auto stabs = ordered({kXL17, kXD17}, code17());
  const auto vars = vars_for(stabs);
  ProgramText pt("surface_init_plus", 17, vars);
  pt.init(range_qubits(0, 17));
  for (std::size_t i = 0; i < stabs.size(); ++i) pt.assign(vars[i], stabs[i]);
  pt.correct(vars, kAxiomatic);
  pt.off("s0").off("s1");
  auto cs = new_case("surface.init_plus", "surface", pt.build(), false);
  cs.triples.push_back(make_triple(cs.name, "surface/init_plus", "TRUE", cs.program,
                                   with(to_string(kXL17), active17())));
  cs.flags.push_back("stabilizers beyond s1 completed from a 17-qubit layout; corner faces "
                     "X1X3, X2X5, X8X11, X10X12 omitted so all stabilizers commute");
  return cs;
}

CaseStudy logical_z17(int errors) {
  const auto stabs = ordered({kXL17, kXD17}, code17());
  const auto vars = vars_for(stabs);
  const auto act = active17();
  const std::vector<std::string> act_vars(vars.begin() + 2, vars.end());
  const Sigma sig = sigma_of(act_vars, act);
  const std::string base = errors == 0 ? "surface_logical_z"
                           : errors == 1 ? "surface_noisy_z"
                                         : "surface_noisy_zz";
  ProgramText pt(base, 17, vars);
  pt.apply(P("Z4*Z9*Z13"));
  if (errors >= 1) {
    pt.comment(errors == 1 ? "a Z error on q9" : "Z errors on q9 and q13");
    pt.gate("Z", {9});
  }
  if (errors >= 2) pt.gate("Z", {13});
  if (errors >= 1) pt.correct(act_vars, kLookup);

  const std::string name = errors == 0 ? "surface.logical_z"
                           : errors == 1 ? "surface.noisy_z"
                                         : "surface.noisy_zz";
  auto cs = new_case(name, "surface", pt.build(), false);
  const auto xl = to_string(kXL17), mxl = neg(kXL17);
  if (errors == 0) {
    cs.triples.push_back(make_triple(name + ".plus", "surface/logical_z", xl, cs.program, mxl, sig));
    cs.triples.push_back(make_triple(name + ".minus", "surface/logical_z", mxl, cs.program, xl, sig));
  } else {
    const std::string tag = errors == 1 ? "surface/noisy_z" : "surface/noisyfail";
    // Two errors lead the decoder to Z4, which cancels the logical gate.
    const auto post_plus = errors == 1 ? mxl : xl;
    const auto post_minus = errors == 1 ? xl : mxl;
    cs.triples.push_back(make_triple(name + ".plus", tag, with(xl, act), cs.program,
                                     with(post_plus, act), sig));
    cs.triples.push_back(make_triple(name + ".minus", tag, with(mxl, act), cs.program,
                                     with(post_minus, act), sig));
  }
  return cs;
}

// ---------------------------------------------------------------------------
// 19-qubit X-cut patch for |0_L>: defects X0X1X2X4 and X14X16X17X18,
// Z_L = Z4Z9Z14.

Patch patch19() {
  return Patch({{0, {2}}, {1, {1, 3}}, {2, {0, 2, 4}}, {3, {1, 3}}, {4, {0, 2, 4}},
                {5, {1, 3}}, {6, {0, 2, 4}}, {7, {1, 3}}, {8, {2}}});
}

// s0..s9 as printed, then the completed boundary stabilizers s10..s17.
std::vector<SignedPauli> code19() {
  const auto printed = std::vector<SignedPauli>{
      P("X0*X1*X2*X4"),   P("X4*X6*X7*X9"),     P("X9*X11*X12*X14"), P("X14*X16*X17*X18"),
      P("Z1*Z3*Z4*Z6"),   P("Z2*Z4*Z5*Z7"),     P("Z6*Z8*Z9*Z11"),   P("Z11*Z13*Z14*Z16"),
      P("Z7*Z9*Z10*Z12"), P("Z12*Z14*Z15*Z17")};
  return ordered(printed, patch19().stabilizers(-1, 9, -2, 6, {{1, 0}, {1, 4}, {7, 0}, {7, 4}}));
}

std::vector<SignedPauli> active19() {
  auto s = code19();
  s[0] = s[3] = SignedPauli::identity();
  return s;
}

CaseStudy init_zero() {
  const auto stabs = code19();
  const auto vars = vars_for(stabs);
  // s19..s21 are the single-qubit Z checks written s_{w+1}..s_{w+3}.
  auto all_vars = vars;
  for (const char *v : {"s19", "s20", "s21"}) all_vars.push_back(v);
  ProgramText pt("surface_init_zero", 19, all_vars);
  pt.init(range_qubits(0, 19));
  for (std::size_t i = 0; i < stabs.size(); ++i) pt.assign(vars[i], stabs[i]);
  pt.correct(vars, kAxiomatic);
  for (int i = 0; i < 4; ++i) pt.off(vars[i]);
  const std::vector<Qubit> cut = {4, 9, 14};
  auto reduced = [&](const SignedPauli &p) {
    std::map<Qubit, Letter> ls = p.letters();
    for (Qubit q : cut) ls.erase(q);
    return SignedPauli(0, ls);
  };
  for (int i = 4; i < 10; ++i) pt.assign(vars[i], reduced(stabs[i]));
  const std::vector<SignedPauli> fix = {stabs[1], stabs[2], stabs[3]};
  const std::vector<std::string> checks = {"s19", "s20", "s21"};
  for (int k = 0; k < 3; ++k) pt.assign(checks[k], SignedPauli::single(Letter::Z, cut[k]));
  pt.comment("set q4, q9, q14 to |0>");
  for (int k = 0; k < 3; ++k) {
    const auto z = SignedPauli::single(Letter::Z, cut[k]);
    pt.line("if M[" + checks[k] + "; q" + std::to_string(cut[k]) + "] then skip else " +
            qubit_list(fix[k].support()) + " := " + to_string(fix[k]) + "; " + checks[k] +
            " := " + to_string(z) + " end");
  }
  for (const auto &c : checks) pt.off(c);
  for (int i = 4; i < 10; ++i) pt.assign(vars[i], stabs[i]);
  pt.assign("s1", stabs[1]).assign("s2", stabs[2]);
  pt.correct(vars, kLookup);

  auto cs = new_case("surface.init_zero", "surface", pt.build(), false);
  cs.triples.push_back(make_triple(cs.name, "surface/init_zero", "TRUE", cs.program, "Z4*Z9*Z14"));
  cs.flags = {
      "s10..s17 completed from a 19-qubit layout; corner faces X1X3, X2X5, X13X16, X15X17 "
      "omitted so all stabilizers commute",
      "third measurement reassigns s21 (printed as s_{w+1})",
      "added s19..s21 := I and restored s4..s9 to weight 4 before re-enabling s1, s2: the "
      "reduced checks anticommute with the re-enabled X stabilizers",
      "final correct uses the lookup decoder; the decoding axiom alone drops Z4Z9Z14",
  };
  return cs;
}

CaseStudy logical_x19() {
  const auto stabs = code19();
  const auto vars = vars_for(stabs);
  const auto act = active19();
  const Sigma sig = sigma_of(vars, act);
  ProgramText pt("surface_logical_x", 19, vars);
  pt.apply(P("X0*X1*X2*X4"));
  auto cs = new_case("surface.logical_x", "surface", pt.build(), false);
  const auto zl = P("Z4*Z9*Z14");
  cs.triples.push_back(make_triple(cs.name + ".plus", "surface/logical_x", to_string(zl),
                                   cs.program, neg(zl), sig));
  cs.triples.push_back(make_triple(cs.name + ".minus", "surface/logical_x", neg(zl), cs.program,
                                   to_string(zl), sig));
  return cs;
}

// ---------------------------------------------------------------------------
// 41-qubit patch for the vertical move. Printed qubits 0..10 keep their
// labels; the rest of the 9x9 rectangle is numbered from 11.

Patch patch41() {
  Patch p;
  const std::vector<Coord> printed = {{0, 2}, {1, 3}, {2, 4}, {3, 3}, {3, 5}, {4, 2},
                                      {4, 4}, {4, 6}, {5, 3}, {5, 5}, {6, 4}};
  for (std::size_t i = 0; i < printed.size(); ++i) p.pin(printed[i], static_cast<Qubit>(i));
  p.fill(9, 9, 11);
  return p;
}

CaseStudy vertical_move() {
  const auto patch = patch41();
  const auto x_l = P("X2*X3*X4*X6"), x_new = P("X6*X8*X9*X10");
  const auto star_l = P("Z3*Z5*Z6*Z8"), star_r = P("Z4*Z6*Z7*Z9");
  const auto stabs = ordered({x_l, x_new, star_l, star_r}, patch.stabilizers(0, 8, 0, 8, {}));
  const auto vars = vars_for(stabs);
  const std::string tmp = "s" + std::to_string(stabs.size() + 1);
  auto all_vars = vars;
  all_vars.push_back(tmp);
  const std::vector<std::string> rest(vars.begin() + 4, vars.end());

  ProgramText pt("surface_vertical_move", patch.size(), all_vars);
  pt.off("s0");
  for (std::size_t i = 1; i < stabs.size(); ++i) pt.assign(vars[i], stabs[i]);
  pt.correct(vars, kAxiomatic);
  pt.off("s1");
  pt.assign("s2", P("Z3*Z5*Z8")).assign("s3", P("Z4*Z7*Z9"));
  pt.assign(tmp, P("Z6"));
  pt.line("if M[" + tmp + "; q6] then skip else q6 q8 q9 q10 := X6*X8*X9*X10; " + tmp +
          " := Z6 end");
  pt.off(tmp);
  pt.assign("s0", x_l).assign("s2", star_l).assign("s3", star_r);
  pt.correct(vars, kLookup);

  auto cs = new_case("surface.vertical_move", "surface", pt.build(), false);
  auto act = stabs;
  act[0] = SignedPauli::identity();
  const Sigma sig = sigma_of(vars, act);
  // a = 0.6, b = 0.8 so that aZ_L + bX_L squares to the identity.
  const std::string pre = "0.6*Z0*Z1*Z2 + 0.8*X2*X3*X4*X6";
  const std::string post = "0.6*Z0*Z1*Z2*Z6 + 0.8*X6*X8*X9*X10";
  std::vector<SignedPauli> act_list(act.begin() + 1, act.end());
  cs.triples.push_back(make_triple(cs.name, "surface/vertical_move", with("(" + pre + ")", act_list),
                                   cs.program, post, sig));
  cs.flags = {
      "qubits 11..40 complete a 9x9 planar patch around the printed qubits 0..10",
      "s4..s39 completed from that patch; the precondition conjoins the active stabilizers",
      "added " + tmp + " := I before re-enabling s0: Z6 anticommutes with X2X3X4X6",
      "coefficients instantiated as a = 0.6, b = 0.8",
      "final correct uses the lookup decoder, which resolves the s0 syndrome with Z6",
  };
  return cs;
}

// ---------------------------------------------------------------------------
// Distance-3 planar patch for the transversal H.

Patch patch13() {
  return Patch({{0, {0, 2, 4}}, {1, {1, 3}}, {2, {0, 2, 4}}, {3, {1, 3}}, {4, {0, 2, 4}}});
}

CaseStudy logical_h() {
  const auto patch = patch13();
  // After H: X checks centred on even rows, Z checks on odd rows.
  std::vector<SignedPauli> after = {P("X3*X5*X6*X8"), P("Z1*Z3*Z4*Z6")};
  std::vector<SignedPauli> xs, zs;
  for (int r = 0; r <= 4; ++r) {
    for (int c = 0; c <= 4; ++c) {
      if ((r + c) % 2 == 0) continue;
      const auto x = patch.plaquette(Letter::X, r, c);
      const auto z = patch.plaquette(Letter::Z, r, c);
      if (r % 2 == 0) xs.push_back(x);
      else zs.push_back(z);
    }
  }
  std::vector<SignedPauli> all = xs;
  all.insert(all.end(), zs.begin(), zs.end());
  after = ordered(after, all);
  const auto vars = vars_for(after);
  std::vector<SignedPauli> before;
  for (const auto &p : after) {
    std::map<Qubit, Letter> ls;
    for (const auto &[q, l] : p.letters()) ls[q] = l == Letter::X ? Letter::Z : Letter::X;
    before.emplace_back(0, ls);
  }
  ProgramText pt("surface_logical_h", 13, vars);
  pt.comment("turn off all local stabilizers");
  for (const auto &v : vars) pt.off(v);
  pt.comment("local H gates");
  for (Qubit q = 0; q < 13; ++q) pt.gate("H", {q});
  pt.comment("turn on the stabilizers with their types swapped");
  for (std::size_t i = 0; i < vars.size(); ++i) pt.assign(vars[i], after[i]);
  auto cs = new_case("surface.logical_h", "surface", pt.build(), 13 <= kDefaultOracleCap);
  const Sigma sig = sigma_of(vars, before);
  cs.triples.push_back(make_triple(cs.name + ".z", "surface/logical_h", "Z1*Z6*Z11", cs.program,
                                   "X1*X6*X11", sig));
  cs.triples.push_back(make_triple(cs.name + ".x", "surface/logical_h", "X5*X6*X7", cs.program,
                                   "Z5*Z6*Z7", sig));
  cs.flags.push_back("q := H q written as one H statement per qubit");
  return cs;
}

// ---------------------------------------------------------------------------
// 51-qubit braiding patch. Z-cut qubit 1: defect star Z5Z9Z10Z15 with its
// partner Z14Z19Z20Z25, X_L1 = X9X14. X-cut qubit 2: defect face
// X22X27X28X33 with its partner X44X48X49, Z_L2 = Z33Z44.

Patch patch51() {
  const std::vector<int> even6 = {0, 2, 4, 6, 8, 10}, odd5 = {1, 3, 5, 7, 9};
  return Patch({{0, {2, 4, 6, 8, 10}}, {1, {3, 5, 7, 9}}, {2, {2, 4, 6, 8, 10}}, {3, odd5},
                {4, even6}, {5, odd5}, {6, even6}, {7, odd5}, {8, even6}, {9, {3, 5, 7, 9}}});
}

struct BraidStep {
  Coord from, to;
};

const std::vector<BraidStep> kBraidPath = {
    {{2, 3}, {4, 3}}, {{4, 3}, {6, 3}}, {{6, 3}, {8, 3}}, {{8, 3}, {8, 5}},
    {{8, 5}, {8, 7}}, {{8, 7}, {8, 9}}, {{8, 9}, {6, 9}}, {{6, 9}, {4, 9}},
    {{4, 9}, {2, 9}}, {{2, 9}, {2, 7}}, {{2, 7}, {2, 5}}, {{2, 5}, {2, 3}},
};

CaseStudy braiding() {
  const auto patch = patch51();
  // Faces X0X5X9, X14X19 and X42X47 meet a boundary star on one qubit.
  auto stabs = patch.stabilizers(0, 9, 0, 10, {{1, 2}, {3, 0}, {9, 2}});
  // Stars first.
  std::stable_partition(stabs.begin(), stabs.end(), [](const SignedPauli &p) {
    return p.letters().begin()->second == Letter::Z;
  });
  const auto vars = vars_for(stabs);
  const std::string tmp = "s" + std::to_string(stabs.size());
  auto all_vars = vars;
  all_vars.push_back(tmp);
  auto var_of = [&](const SignedPauli &p) {
    const auto it = std::find(stabs.begin(), stabs.end(), p);
    return vars[static_cast<std::size_t>(it - stabs.begin())];
  };
  std::vector<SignedPauli> live = stabs;
  auto set_off = [&](const SignedPauli &p) {
    live[static_cast<std::size_t>(std::find(stabs.begin(), stabs.end(), p) - stabs.begin())] =
        SignedPauli::identity();
  };
  auto set_on = [&](const SignedPauli &p) {
    live[static_cast<std::size_t>(std::find(stabs.begin(), stabs.end(), p) - stabs.begin())] = p;
  };
  const auto z_l1 = patch.star(2, 3), partner1 = patch.star(4, 1);
  const auto x_l2 = patch.face(5, 6), partner2 = patch.face(9, 6);
  for (const auto &p : {z_l1, partner1, x_l2, partner2}) set_off(p);
  const auto initial = live;

  ProgramText pt("surface_braiding", patch.size(), all_vars);
  std::map<std::string, ProgramUnit> registry;
  int k = 0;
  for (const auto &step : kBraidPath) {
    const auto a = patch.star(step.from.first, step.from.second);
    const auto b = patch.star(step.to.first, step.to.second);
    Qubit m = 0;
    for (Qubit q : a.support()) {
      if (b.letter(q)) m = q;
    }
    const auto x_m = SignedPauli::single(Letter::X, m);
    std::vector<SignedPauli> faces;
    for (const auto &p : live) {
      if (!p.is_identity() && p.letter(m) == Letter::X) faces.push_back(p);
    }
    pt.comment("qmov(" + to_string(a) + ", " + to_string(b) + ")");
    pt.off(var_of(a));
    pt.assign(var_of(b), b);
    for (const auto &f : faces) pt.assign(var_of(f), f);
    pt.correct(vars, kAxiomatic);
    pt.off(var_of(b));
    set_off(b);
    for (const auto &f : faces) {
      auto ls = f.letters();
      ls.erase(m);
      pt.assign(var_of(f), SignedPauli(0, ls));
    }
    pt.assign(tmp, x_m);
    pt.line("if M[" + tmp + "; q" + std::to_string(m) + "] then skip else " +
            qubit_list(b.support()) + " := " + to_string(b) + "; " + tmp + " := " +
            to_string(x_m) + " end");
    pt.off(tmp);
    pt.assign(var_of(a), a);
    set_on(a);
    for (const auto &f : faces) pt.assign(var_of(f), f);

    // Single-error table over the live stabilizers, except that the lone
    // syndrome of the re-enabled star is resolved on the shared qubit.
    auto table = single_error_table(live);
    const auto target = syndrome_of(x_m, live);
    bool replaced = false;
    for (auto &e : table) {
      if (e.signs == target) {
        e.correction = x_m;
        replaced = true;
      }
    }
    if (!replaced) table.push_back({target, x_m});
    const std::string name = "braid_move" + std::to_string(++k);
    registry[name] = make_lookup_decoder(name, patch.size(), vars, live, table);
    pt.correct(vars, name);
  }

  auto cs = new_case("surface.braiding", "surface", pt.build(), false);
  cs.registry = std::move(registry);
  const Sigma sig = sigma_of(vars, initial);
  std::vector<SignedPauli> act;
  for (const auto &p : initial) {
    if (!p.is_identity()) act.push_back(p);
  }
  const auto x_l1 = P("X9*X14"), z_l2 = P("Z33*Z44");
  auto add = [&](const std::string &suffix, const SignedPauli &pre, const SignedPauli &post) {
    cs.triples.push_back(make_triple(cs.name + "." + suffix, "surface/braiding",
                                     with(to_string(pre), act), cs.program, to_string(post),
                                     sig));
  };
  add("xi", x_l1, mul_pauli(x_l1, x_l2));
  add("iz", z_l2, mul_pauli(z_l1, z_l2));
  add("ix", x_l2, x_l2);
  add("zi", z_l1, z_l1);
  cs.flags = {
      "active stabilizers completed from a 51-qubit layout consistent with every printed "
      "index; faces X0X5X9, X14X19, X42X47 omitted so all stabilizers commute",
      "partner defects chosen as star Z14Z19Z20Z25 and face X44X48X49; X_L1 = X9X14, "
      "Z_L2 = Z33Z44",
      "qmov expanded to the vertical-move template with roles of X and Z exchanged, "
      "including the " + tmp + " := I repair",
      "each move's closing correct is a registry decoder that resolves the re-enabled star's "
      "lone syndrome on the shared qubit; a plain single-error table would pick a qubit next to "
      "the partner defect",
      "the printed accumulated X chain omits X40, which the seventh move contributes",
      "preconditions conjoin the active stabilizers",
  };
  return cs;
}

}  // namespace

std::vector<CaseStudy> gen_surface_suite() {
  return {init_plus(),   logical_z17(0), logical_z17(1), logical_z17(2), init_zero(),
          logical_x19(), vertical_move(), logical_h(),   braiding()};
}

}  // namespace qecv
