#include "hermlat/finite_quotients.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <memory>
#include <string_view>

namespace hermlat {

FpMatrix::FpMatrix(unsigned p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {
  if (p != 2 && p != 3) throw QuotientError("FpMatrix: only p = 2 and p = 3 are supported");
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool FpMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (a_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::uint8_t> FpMatrix::apply(const std::vector<std::uint8_t>& x) const {
  if (x.size() != n_) throw DimensionError("FpMatrix::apply: wrong vector length");
  std::vector<std::uint8_t> y(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += a_[i * n_ + j] * x[j];
    y[i] = static_cast<std::uint8_t>(acc % p_);
  }
  return y;
}

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
  if (x.p_ != y.p_ || x.n_ != y.n_) throw DimensionError("FpMatrix: operands do not match");
  const std::size_t n = x.n_;
  FpMatrix out(x.p_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += x.a_[i * n + k] * y.a_[k * n + j];
      out.a_[i * n + j] = static_cast<std::uint8_t>(acc % x.p_);
    }
  return out;
}

// ---------------------------------------------------------------------------

QuadraticFormF2::QuadraticFormF2(std::size_t n, std::vector<std::uint8_t> values)
    : n_(n), values_(std::move(values)) {
  if (n > 20) throw QuotientError("QuadraticFormF2: dimension too large");
  if (values_.size() != (std::size_t{1} << n)) throw QuotientError("QuadraticFormF2: value table has wrong size");
  for (auto& v : values_) v &= 1;
  if (values_[0] != 0) throw QuotientError("QuadraticFormF2: q(0) must be 0");
  for (std::uint32_t x = 0; x < values_.size(); ++x)
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t l = 0; l < n_; ++l) {
        // polarization must be bilinear: b(x, e_k + e_l) = b(x, e_k) + b(x, e_l)
        const std::uint32_t ek = 1u << k, el = 1u << l;
        if (k != l && polar(x, ek ^ el) != (polar(x, ek) ^ polar(x, el)))
          throw QuotientError("QuadraticFormF2: values do not define a quadratic form");
      }
}

QuadraticFormF2 QuadraticFormF2::from_polynomial(std::size_t n, const std::vector<std::uint8_t>& diag,
                                                 const std::vector<std::vector<std::uint8_t>>& cross) {
  std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
  for (std::uint32_t x = 0; x < values.size(); ++x) {
    unsigned q = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!((x >> k) & 1)) continue;
      q ^= diag.at(k) & 1;
      for (std::size_t l = k + 1; l < n; ++l)
        if ((x >> l) & 1) q ^= cross.at(k).at(l) & 1;
    }
    values[x] = static_cast<std::uint8_t>(q);
  }
  return QuadraticFormF2(n, std::move(values));
}

QuadraticFormF2 QuadraticFormF2::plus_type(std::size_t m) {
  const std::size_t n = 2 * m;
  std::vector<std::uint8_t> diag(n, 0);
  std::vector<std::vector<std::uint8_t>> cross(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t h = 0; h < m; ++h) cross[2 * h][2 * h + 1] = 1;
  return from_polynomial(n, diag, cross);
}

QuadraticFormF2 QuadraticFormF2::minus_type(std::size_t m) {
  if (m == 0) throw QuotientError("QuadraticFormF2::minus_type: dimension must be positive");
  const std::size_t n = 2 * m;
  std::vector<std::uint8_t> diag(n, 0);
  std::vector<std::vector<std::uint8_t>> cross(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t h = 0; h < m; ++h) cross[2 * h][2 * h + 1] = 1;
  diag[n - 2] = diag[n - 1] = 1;
  return from_polynomial(n, diag, cross);
}

std::size_t QuadraticFormF2::polar_rank() const {
  std::vector<std::uint32_t> rows;
  for (std::size_t k = 0; k < n_; ++k) {
    std::uint32_t row = 0;
    for (std::size_t l = 0; l < n_; ++l)
      if (polar(1u << k, 1u << l)) row |= 1u << l;
    rows.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_; ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [&](std::uint32_t r) { return (r >> col) & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::size_t QuadraticFormF2::zero_count() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), 0));
}

QuadraticFormF2 induced_quadratic_form(const HermitianLattice<GaussianInt>& lat) {
  const Matrix<GaussianInt> g = lat.basis_gram();
  const std::size_t n = lat.rank();
  if (n > 20) throw QuotientError("induced_quadratic_form: rank too large");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!divides(GaussianInt::prime(), g(j, k)))
        throw QuotientError("induced_quadratic_form: inner products are not all divisible by 1+i");
  std::vector<std::uint8_t> values(std::size_t{1} << n, 0);
  for (std::uint32_t x = 1; x < values.size(); ++x) {
    GaussianInt norm_x(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!((x >> j) & 1)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if ((x >> k) & 1) norm_x += g(j, k);
    }
    Integer half = norm_x.a() / 2;
    Integer r = half % 2;
    values[x] = static_cast<std::uint8_t>(sgn(r) != 0 ? 1 : 0);
  }
  return QuadraticFormF2(n, std::move(values));
}

std::uint32_t apply_f2(const FpMatrix& m, std::uint32_t x) {
  if (m.modulus() != 2) throw QuotientError("apply_f2: matrix is not over F_2");
  std::uint32_t y = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned bit = 0;
    for (std::size_t j = 0; j < m.size(); ++j) bit ^= m(i, j) & ((x >> j) & 1);
    y |= static_cast<std::uint32_t>(bit) << i;
  }
  return y;
}

FormTypeResult form_type(const QuadraticFormF2& q) {
  if (q.dimension() == 0 || q.dimension() % 2 != 0) throw QuotientError("form_type: dimension must be even and positive");
  if (!q.is_nondegenerate()) throw QuotientError("form_type: form is degenerate");
  const std::size_t m = q.dimension() / 2;
  const std::size_t zeros = q.zero_count();
  if (zeros == QuadraticFormF2::plus_type(m).zero_count()) return {FormType::kPlus, zeros};
  if (zeros == QuadraticFormF2::minus_type(m).zero_count()) return {FormType::kMinus, zeros};
  throw QuotientError("form_type: zero count matches neither reference form");
}

const char* to_string(FormType t) { return t == FormType::kPlus ? "plus" : "minus"; }

// ---------------------------------------------------------------------------

namespace detail {

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 40;

/// Append-only byte arena; handles stay valid as it grows.
class Arena {
 public:
  static constexpr std::size_t kChunk = std::size_t{1} << 24;

  std::uint64_t store(std::string_view bytes) {
    if (chunks_.empty() || used_ + bytes.size() + 2 > kChunk) {
      chunks_.push_back(std::make_unique<char[]>(kChunk));
      used_ = 0;
    }
    char* base = chunks_.back().get() + used_;
    const auto len = static_cast<std::uint16_t>(bytes.size());
    std::memcpy(base, &len, 2);
    std::memcpy(base + 2, bytes.data(), bytes.size());
    const std::uint64_t handle = (static_cast<std::uint64_t>(chunks_.size() - 1) << 32) | used_;
    used_ += bytes.size() + 2;
    return handle;
  }

  std::string_view view(std::uint64_t handle) const {
    const char* base = chunks_[handle >> 32].get() + (handle & 0xffffffffu);
    std::uint16_t len;
    std::memcpy(&len, base, 2);
    return {base + 2, len};
  }

 private:
  std::vector<std::unique_ptr<char[]>> chunks_;
  std::size_t used_ = 0;
};

/// Open-addressing set of serialized elements.
class ElementSet {
 public:
  explicit ElementSet(Arena& arena) : arena_(arena), slots_(1024) {}

  /// Inserts bytes; returns the new handle, or nullopt if already present.
  std::optional<std::uint64_t> insert(std::string_view bytes) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    const std::uint64_t h = std::hash<std::string_view>{}(bytes);
    std::size_t i = h & (slots_.size() - 1);
    while (slots_[i].handle_plus_one != 0) {
      if (slots_[i].hash == h && arena_.view(slots_[i].handle_plus_one - 1) == bytes) return std::nullopt;
      i = (i + 1) & (slots_.size() - 1);
    }
    const std::uint64_t handle = arena_.store(bytes);
    slots_[i] = {handle + 1, h};
    ++size_;
    return handle;
  }

  std::size_t size() const { return size_; }

 private:
  struct Slot {
    std::uint64_t handle_plus_one = 0;
    std::uint64_t hash = 0;
  };

  void grow() {
    std::vector<Slot> old(slots_.size() * 2);
    old.swap(slots_);
    for (const Slot& s : old) {
      if (s.handle_plus_one == 0) continue;
      std::size_t i = s.hash & (slots_.size() - 1);
      while (slots_[i].handle_plus_one != 0) i = (i + 1) & (slots_.size() - 1);
      slots_[i] = s;
    }
  }

  Arena& arena_;
  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

void encode(const std::vector<std::int64_t>& v, std::string& out) {
  out.clear();
  for (std::int64_t x : v) {
    auto z = (static_cast<std::uint64_t>(x) << 1) ^ static_cast<std::uint64_t>(x >> 63);
    while (z >= 0x80) {
      out.push_back(static_cast<char>((z & 0x7f) | 0x80));
      z >>= 7;
    }
    out.push_back(static_cast<char>(z));
  }
}

void decode(std::string_view bytes, std::vector<std::int64_t>& out) {
  std::size_t k = 0;
  std::uint64_t z = 0;
  unsigned shift = 0;
  for (char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    z |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if (b & 0x80) {
      shift += 7;
      continue;
    }
    out[k++] = static_cast<std::int64_t>(z >> 1) ^ -static_cast<std::int64_t>(z & 1);
    z = 0;
    shift = 0;
  }
}

std::int64_t checked(__int128 v) {
  if (v >= kEntryLimit || v <= -kEntryLimit) throw QuotientError("bfs_group_closure: matrix entries grew too large");
  return static_cast<std::int64_t>(v);
}

void multiply(std::size_t n, std::size_t width, EntryArithmetic arith, unsigned p, const std::vector<std::int64_t>& x,
              const std::vector<std::int64_t>& y, std::vector<std::int64_t>& out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (arith == EntryArithmetic::kModP) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += x[i * n + k] * y[k * n + j];
        out[i * n + j] = acc % p;
        continue;
      }
      __int128 re = 0, im = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::int64_t a = x[(i * n + k) * width], b = x[(i * n + k) * width + 1];
        const std::int64_t c = y[(k * n + j) * width], d = y[(k * n + j) * width + 1];
        if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
        const __int128 bd = static_cast<__int128>(b) * d;
        re += static_cast<__int128>(a) * c - bd;
        im += static_cast<__int128>(a) * d + static_cast<__int128>(b) * c;
        // (a+bw)(c+dw) = ac - bd + (ad + bc - bd)w since w^2 = -1 - w
        if (arith == EntryArithmetic::kEisenstein) im -= bd;
      }
      out[(i * n + j) * width] = checked(re);
      out[(i * n + j) * width + 1] = checked(im);
    }
}

}  // namespace

ClosureResult packed_closure(std::size_t n, std::size_t width, EntryArithmetic arith, unsigned p,
                             const std::vector<std::vector<std::int64_t>>& generators, std::uint64_t cap) {
  const std::size_t len = n * n * width;
  for (const auto& g : generators)
    if (g.size() != len) throw DimensionError("bfs_group_closure: generator has wrong size");
  std::vector<std::int64_t> id(len, 0);
  for (std::size_t i = 0; i < n; ++i) id[(i * n + i) * width] = 1;

  Arena arena;
  ElementSet seen(arena);
  std::vector<std::uint64_t> queue;
  std::string buf;
  encode(id, buf);
  queue.push_back(*seen.insert(buf));
  if (queue.size() > cap) return {std::nullopt, cap};

  std::vector<std::int64_t> current(len), product(len);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    decode(arena.view(queue[head]), current);
    for (const auto& g : generators) {
      multiply(n, width, arith, p, current, g, product);
      encode(product, buf);
      if (buf.size() > 0xffff) throw QuotientError("bfs_group_closure: element serialization too long");
      if (auto h = seen.insert(buf)) {
        queue.push_back(*h);
        if (queue.size() > cap) return {std::nullopt, cap};
      }
    }
  }
  return {static_cast<std::uint64_t>(queue.size()), cap};
}

}  // namespace detail

ClosureResult bfs_group_closure(const std::vector<FpMatrix>& generators, std::uint64_t cap) {
  if (generators.empty()) return {1, cap};
  const std::size_t n = generators.front().size();
  const unsigned p = generators.front().modulus();
  std::vector<std::vector<std::int64_t>> packed;
  for (const auto& g : generators) {
    if (g.size() != n || g.modulus() != p) throw DimensionError("bfs_group_closure: generators differ in size or field");
    packed.emplace_back(g.entries().begin(), g.entries().end());
  }
  return detail::packed_closure(n, 1, detail::EntryArithmetic::kModP, p, packed, cap);
}

// ---------------------------------------------------------------------------
// Schreier-Sims

namespace {

using Perm = std::vector<std::uint16_t>;

// (x * y)(pt) = y(x(pt)): apply x first
Perm compose(const Perm& x, const Perm& y) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
  return out;
}

Perm invert(const Perm& x) {
  Perm out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[x[i]] = static_cast<std::uint16_t>(i);
  return out;
}

bool is_identity(const Perm& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != i) return false;
  return true;
}

std::optional<std::uint16_t> first_moved(const Perm& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != i) return static_cast<std::uint16_t>(i);
  return std::nullopt;
}

// point k stands for the nonzero vector with base-p digits of k + 1
Perm matrix_permutation(const FpMatrix& m) {
  const unsigned p = m.modulus();
  const std::size_t n = m.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  Perm out(total - 1);
  std::vector<std::uint8_t> v(n);
  for (std::size_t k = 0; k + 1 < total; ++k) {
    std::size_t code = k + 1;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint8_t>(code % p);
      code /= p;
    }
    const auto w = m.apply(v);
    std::size_t image = 0;
    for (std::size_t i = n; i-- > 0;) image = image * p + w[i];
    if (image == 0) throw QuotientError("schreier_sims_order: generator is not invertible");
    out[k] = static_cast<std::uint16_t>(image - 1);
  }
  return out;
}

struct Level {
  std::uint16_t base = 0;
  std::vector<Perm> gens;
  std::vector<std::uint16_t> orbit;
  std::vector<std::int32_t> slot;  // position in orbit or -1
  std::vector<Perm> transversal;   // transversal[slot]: base -> orbit point

  void rebuild(std::size_t points) {
    orbit.assign(1, base);
    slot.assign(points, -1);
    slot[base] = 0;
    Perm id(points);
    for (std::size_t i = 0; i < points; ++i) id[i] = static_cast<std::uint16_t>(i);
    transversal.assign(1, id);
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& s : gens) {
        const std::uint16_t img = s[orbit[head]];
        if (slot[img] >= 0) continue;
        slot[img] = static_cast<std::int32_t>(orbit.size());
        orbit.push_back(img);
        transversal.push_back(compose(transversal[head], s));
      }
    }
  }
};

}  // namespace

Integer schreier_sims_order(const std::vector<FpMatrix>& generators) {
  std::vector<Perm> gens;
  std::size_t points = 0;
  for (const auto& g : generators) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      total *= g.modulus();
      if (total > 4096) throw QuotientError("schreier_sims_order: more than 4095 nonzero vectors");
    }
    Perm perm = matrix_permutation(g);
    if (points != 0 && perm.size() != points) throw DimensionError("schreier_sims_order: generators differ in size");
    points = perm.size();
    if (!is_identity(perm)) gens.push_back(std::move(perm));
  }
  if (gens.empty()) return 1;

  std::vector<Level> levels;
  auto fixes_base = [&](const Perm& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g[levels[l].base] != levels[l].base) return false;
    return true;
  };
  for (const auto& g : gens) {
    if (fixes_base(g, levels.size())) {
      levels.push_back({});
      levels.back().base = *first_moved(g);
    }
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& g : gens)
      if (fixes_base(g, l)) levels[l].gens.push_back(g);
    levels[l].rebuild(points);
  }

  // strip g through levels from `start`; returns the residue and the level
  // where it stopped (levels.size() if it sifted through)
  auto sift = [&](Perm g, std::size_t start) {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const std::int32_t s = levels[l].slot[g[levels[l].base]];
      if (s < 0) return std::pair{g, l};
      g = compose(g, invert(levels[l].transversal[static_cast<std::size_t>(s)]));
    }
    return std::pair{g, levels.size()};
  };

  std::size_t i = levels.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t pos = 0; !restarted && pos < levels[i].orbit.size(); ++pos) {
      for (std::size_t gi = 0; gi < levels[i].gens.size() && !restarted; ++gi) {
        const Level& cur = levels[i];
        const Perm& s = cur.gens[gi];
        const std::uint16_t image = s[cur.orbit[pos]];
        const Perm h = compose(compose(cur.transversal[pos], s),
                               invert(cur.transversal[static_cast<std::size_t>(cur.slot[image])]));
        if (is_identity(h)) continue;
        auto [residue, j] = sift(h, i + 1);
        if (is_identity(residue)) continue;
        if (j == levels.size()) {
          levels.push_back({});
          levels.back().base = *first_moved(residue);
        }
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels[l].gens.push_back(residue);
          levels[l].rebuild(points);
        }
        i = j + 1;  // the loop decrement resumes at level j
        restarted = true;
      }
    }
  }

  Integer order = 1;
  for (const auto& lv : levels) order *= static_cast<unsigned long>(lv.orbit.size());
  return order;
}

}  // namespace hermlat
