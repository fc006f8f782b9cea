#pragma once

#include <stdexcept>
#include <vector>

#include "buildsets.hpp"
#include "gp.hpp"
#include "graphs.hpp"
#include "hopf.hpp"
#include "partitions.hpp"
#include "rational.hpp"

namespace hopfcalc {

// Exponential series A(x) = sum a_n x^n / n!, coefficients a[0..N].
struct ExpSeries {
  std::vector<Rat> a;
  int order() const { return (int)a.size() - 1; }
};

// Ordinary series without constant term, C(x) = sum c_n x^{n+1},
// coefficients c[0..N-1].
struct OrdSeries {
  std::vector<Rat> c;
  int order() const { return (int)c.size() - 1; }
};

inline void require_unit(const Rat& lead) {
  if (lead != 1) throw std::invalid_argument("leading coefficient must be 1");
}

// All partitions of n as weakly decreasing part lists.
inline std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// --- exponential series: product and multiplicative inverse -----------------

// (A*B)_n = sum_k binom(n,k) a_k b_{n-k}.
inline ExpSeries exp_mul(const ExpSeries& A, const ExpSeries& B) {
  int N = std::min(A.order(), B.order());
  ExpSeries C;
  C.a.assign(N + 1, Rat(0));
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k)
      C.a[n] += Rat(binomial(n, k)) * A.a[k] * B.a[n - k];
  return C;
}

inline ExpSeries mult_inverse_direct(const ExpSeries& A) {
  require_unit(A.a.at(0));
  int N = A.order();
  ExpSeries B;
  B.a.assign(N + 1, Rat(0));
  B.a[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rat s = 0;
    for (int k = 1; k <= n; ++k) s += Rat(binomial(n, k)) * A.a[k] * B.a[n - k];
    B.a[n] = -s;
  }
  return B;
}

// b_n = sum over partitions (f_1 >= ... >= f_k) of n of
//   (-1)^k k!/(prod multiplicities!) * multinomial(n; f) * prod a_{f_i},
// the ordered-set-partition expansion grouped by type.
inline ExpSeries mult_inverse_enumerative(const ExpSeries& A) {
  require_unit(A.a.at(0));
  int N = A.order();
  ExpSeries B;
  B.a.assign(N + 1, Rat(0));
  B.a[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (auto& lam : integer_partitions(n)) {
      Rat coeff = Rat(factorial((unsigned)lam.size())) * Rat(factorial(n));
      Rat denom = 1;
      int run = 1;
      for (size_t i = 0; i < lam.size(); ++i) {
        denom *= Rat(factorial((unsigned)lam[i]));
        if (i + 1 < lam.size() && lam[i + 1] == lam[i]) ++run;
        else { denom *= Rat(factorial((unsigned)run)); run = 1; }
      }
      Rat term = coeff / denom;
      for (int f : lam) term *= A.a[f];
      if (lam.size() % 2) term = -term;
      acc += term;
    }
    B.a[n] = acc;
  }
  return B;
}

// b_n = sum over faces F of the permutahedron pi_n of (-1)^{n-dim F} a_F,
// where a_F multiplies a over the block sizes of the face's composition.
inline ExpSeries mult_inverse_polytopal(const ExpSeries& A, int n_max) {
  require_unit(A.a.at(0));
  ExpSeries B;
  B.a.assign(n_max + 1, Rat(0));
  B.a[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BoolFn pn = incidence_fn(complete_graph(n));
    Rat acc = 0;
    for (auto& [key, rec] : enumerate_faces(pn)) {
      Rat term = ((n - rec.dim) % 2) ? Rat(-1) : Rat(1);
      for (Mask b : rec.witnesses.front()) term *= A.a[popcount(b)];
      acc += term;
    }
    B.a[n] = acc;
  }
  return B;
}

// --- ordinary series: composition and compositional inverse -----------------

// Composition (A o B)(x) read through C(x) = x*Cbar(x): the gap-sequence
// law cbar_n = sum_k abar_k [x^{n-k}] Bbar(x)^{k+1}.
inline OrdSeries ord_compose(const OrdSeries& A, const OrdSeries& B) {
  int N = std::min(A.order(), B.order());
  // powers[j][m] = coefficient of x^m in Bbar(x)^j
  std::vector<std::vector<Rat>> powers(N + 3, std::vector<Rat>(N + 1, Rat(0)));
  powers[0][0] = 1;
  for (int j = 1; j <= N + 2; ++j)
    for (int m = 0; m <= N; ++m)
      for (int i = 0; i <= m && i <= B.order(); ++i)
        powers[j][m] += B.c[i] * powers[j - 1][m - i];
  OrdSeries C;
  C.c.assign(N + 1, Rat(0));
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k <= n; ++k)
      C.c[n] += A.c[k] * powers[k + 1][n - k];
  return C;
}

inline OrdSeries comp_inverse_direct(const OrdSeries& C) {
  require_unit(C.c.at(0));
  int N = C.order();
  OrdSeries D;
  D.c.assign(N + 1, Rat(0));
  D.c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    // coefficient of x^n in Dbar * Cbar(x*Dbar) must vanish; the k=0 term
    // contributes d_n, every other term only uses d_{<n}.
    Rat s = 0;
    for (int k = 1; k <= n; ++k) {
      // [x^{n-k}] Dbar^{k+1} over compositions of n-k into k+1 parts
      std::vector<Rat> pw(n - k + 1, Rat(0));
      pw[0] = 1;
      for (int j = 0; j < k + 1; ++j) {
        std::vector<Rat> nx(n - k + 1, Rat(0));
        for (int m = 0; m <= n - k; ++m)
          for (int i = 0; i + m <= n - k; ++i) nx[m + i] += pw[m] * D.c[i];
        pw = std::move(nx);
      }
      s += C.c[k] * pw[n - k];
    }
    D.c[n] = -s;
  }
  return D;
}

// d_n = sum over partitions (f_1 >= ... >= f_k) of n of
//   (-1)^k (n+k)! / ((n+1)! * prod multiplicities!) * prod c_{f_i}.
inline OrdSeries comp_inverse_enumerative(const OrdSeries& C) {
  require_unit(C.c.at(0));
  int N = C.order();
  OrdSeries D;
  D.c.assign(N + 1, Rat(0));
  D.c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Rat acc = 0;
    for (auto& lam : integer_partitions(n)) {
      int k = (int)lam.size();
      Rat denom = Rat(factorial((unsigned)(n + 1)));
      int run = 1;
      for (size_t i = 0; i < lam.size(); ++i) {
        if (i + 1 < lam.size() && lam[i + 1] == lam[i]) ++run;
        else { denom *= Rat(factorial((unsigned)run)); run = 1; }
      }
      Rat term = Rat(factorial((unsigned)(n + k))) / denom;
      for (int f : lam) term *= C.c[f];
      if (k % 2) term = -term;
      acc += term;
    }
    D.c[n] = acc;
  }
  return D;
}

// d_n = sum over faces F of the associahedron a_n of (-1)^{n-dim F} c_F,
// where c_F multiplies c over the path lengths of the face object, read off
// by the iterated coproduct along the witness composition. (Paths live in
// the co-opposite of the graph monoid, which cancels the co-opposite twist
// of the polytope map, so no reversal here.)
inline OrdSeries comp_inverse_polytopal(const OrdSeries& C, int n_max) {
  require_unit(C.c.at(0));
  OrdSeries D;
  D.c.assign(n_max + 1, Rat(0));
  D.c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BoolFn an = loday_associahedron(n);
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = i;
    PathFamily line = single_path(default_labels(n), word);
    Rat acc = 0;
    for (auto& [key, rec] : enumerate_faces(an)) {
      auto factors = higher_coproduct<F>(line, rec.witnesses.front());
      Rat term = ((n - rec.dim) % 2) ? Rat(-1) : Rat(1);
      for (auto& f : *factors)
        for (auto& path : f.paths) term *= C.c[(int)path.size()];
      acc += term;
    }
    D.c[n] = acc;
  }
  return D;
}

// --- character-group isomorphisms -------------------------------------------

// Multiplicative character on set partitions with value a_{|block|} per block.
inline Character<Pi> partition_character(const ExpSeries& A) {
  return [A](const SetPartition& p) {
    Rat v = 1;
    for (Mask b : p.blocks) v *= A.a.at(popcount(b));
    return v;
  };
}

// Multiplicative character on path families with value c_{|path|} per path.
inline Character<F> path_character(const OrdSeries& C) {
  return [C](const PathFamily& p) {
    Rat v = 1;
    for (auto& w : p.paths) v *= C.c.at((int)w.size());
    return v;
  };
}

// Convolution of characters on set partitions matches the product of
// exponential series: (phi psi)(1_[n]) = sum binom(n,k) a_k b_{n-k}.
inline bool char_group_perm_iso(int n_max, const ExpSeries& A,
                                const ExpSeries& B) {
  auto conv = convolve<Pi>(partition_character(A), partition_character(B));
  ExpSeries C = exp_mul(A, B);
  for (int n = 1; n <= n_max; ++n) {
    SetPartition p;
    p.labels = default_labels(n);
    p.blocks = {full_mask(n)};
    if (conv(p) != C.a.at(n)) return false;
  }
  return true;
}

// Convolution of characters on paths matches composition of ordinary series.
inline bool char_group_assoc_iso(int n_max, const OrdSeries& A,
                                 const OrdSeries& B) {
  auto conv = convolve<F>(path_character(A), path_character(B));
  OrdSeries C = ord_compose(A, B);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = i;
    PathFamily line = single_path(default_labels(n), word);
    if (conv(line) != C.c.at(n)) return false;
  }
  return true;
}

}  // namespace hopfcalc
