#include "extensor/serialize.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

#include "extensor/error.hpp"

namespace extensor {

namespace {

constexpr char kMagic[4] = {'X', 'T', 'N', 'O'};

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  template <class T>
  void uint(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { uint(v); }
  void u32(std::uint32_t v) { uint(v); }
  void u64(std::uint64_t v) { uint(v); }

  void header(StateKind kind) {
    bytes(kMagic, 4);
    u16(kFormatVersion);
    u8(static_cast<std::uint8_t>(kind));
  }

  void field(const Gf2mRing& ring) {
    u8(static_cast<std::uint8_t>(ring.field->degree()));
    u64(ring.field->modulus());
  }
  void value(const Gf2mRing& ring, Gf2mElement e) {
    const unsigned width = (ring.field->degree() + 7) / 8;
    for (unsigned i = 0; i < width; ++i) out_.push_back(static_cast<std::uint8_t>(e.bits >> (8 * i)));
  }
  void value(const IntegerRing&, const BigInt& v) {
    const auto b = v.to_twos_complement();
    u32(static_cast<std::uint32_t>(b.size()));
    bytes(b.data(), b.size());
  }
  template <class Ring, class T>
  void values(const Ring& ring, const std::vector<T>& xs) {
    u64(xs.size());
    for (const auto& x : xs) value(ring, x);
  }
  void flags(const std::vector<std::uint8_t>& xs) {
    u64(xs.size());
    bytes(xs.data(), xs.size());
  }
  void edges(const std::set<Edge>& es) {
    u64(es.size());
    for (const auto& [u, v] : es) {
      u32(u);
      u32(v);
    }
  }

  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& in) : in_(in) {}

  const std::uint8_t* take(std::size_t n) {
    if (n > in_.size() - pos_) throw FormatError("truncated state");
    const auto* p = in_.data() + pos_;
    pos_ += n;
    return p;
  }
  template <class T>
  T uint() {
    const auto* p = take(sizeof(T));
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(p[i]) << (8 * i));
    return v;
  }
  std::uint8_t u8() { return uint<std::uint8_t>(); }
  std::uint16_t u16() { return uint<std::uint16_t>(); }
  std::uint32_t u32() { return uint<std::uint32_t>(); }
  std::uint64_t u64() { return uint<std::uint64_t>(); }
  /// A count whose items take at least `min_item` bytes each.
  std::size_t count(std::size_t min_item) {
    const auto n = u64();
    if (min_item > 0 && n > (in_.size() - pos_) / min_item) throw FormatError("truncated state");
    return static_cast<std::size_t>(n);
  }

  StateKind header() {
    const auto* m = take(4);
    if (std::memcmp(m, kMagic, 4) != 0) throw FormatError("not an extensor state file");
    const auto version = u16();
    if (version != kFormatVersion) {
      throw VersionError("state format version " + std::to_string(version) + " is not supported (expected " +
                         std::to_string(kFormatVersion) + ")");
    }
    const auto kind = u8();
    if (kind < 1 || kind > 3) throw FormatError("unknown state kind");
    return static_cast<StateKind>(kind);
  }

  Gf2mRing field() {
    const unsigned degree = u8();
    const auto modulus = u64();
    try {
      return Gf2mRing(std::make_shared<const Gf2mField>(degree, modulus));
    } catch (const DomainError& e) {
      throw FormatError(std::string("bad field: ") + e.what());
    }
  }
  void value(const Gf2mRing& ring, Gf2mElement& e) {
    const unsigned width = (ring.field->degree() + 7) / 8;
    const auto* p = take(width);
    e.bits = 0;
    for (unsigned i = 0; i < width; ++i) e.bits |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    if (e.bits >= ring.field->size()) throw FormatError("field element out of range");
  }
  void value(const IntegerRing&, BigInt& v) {
    const auto len = u32();
    const auto* p = take(len);
    v = BigInt::from_twos_complement(p, len);
  }
  template <class Ring, class T>
  void values(const Ring& ring, std::vector<T>& xs) {
    xs.resize(count(std::is_same_v<T, BigInt> ? 4 : 1));
    for (auto& x : xs) value(ring, x);
  }
  std::vector<std::uint8_t> flags() {
    const auto n = count(1);
    const auto* p = take(n);
    return {p, p + n};
  }
  template <class Graph>
  Graph graph(std::uint32_t n) {
    Graph g(n);
    const auto m = count(8);
    for (std::size_t i = 0; i < m; ++i) {
      const auto u = u32();
      const auto v = u32();
      if (u >= n || v >= n) throw FormatError("edge endpoint out of range");
      g.add_edge(u, v);
    }
    return g;
  }

  void finish() const {
    if (pos_ != in_.size()) throw FormatError("trailing bytes after state");
  }

 private:
  const std::vector<std::uint8_t>& in_;
  std::size_t pos_ = 0;
};

template <class Ring>
void write_kpath(Writer& w, const KPathState<Ring>& st) {
  constexpr bool kField = std::is_same_v<Ring, Gf2mRing>;
  w.header(kField ? StateKind::kRandomized : StateKind::kDeterministic);
  w.u32(st.k);
  w.u32(st.dims);
  w.u32(st.max_len);
  w.u32(st.n());
  w.u64(st.seed);
  if constexpr (kField) w.field(st.ring);
  w.u8(static_cast<std::uint8_t>(st.embedding));
  w.u8(static_cast<std::uint8_t>(st.target));
  w.u8(st.graded ? 1 : 0);
  w.u32(st.target_grade);
  w.u8(st.unit_weights ? 1 : 0);
  w.edges(st.graph.edges());
  w.u32(st.internal_n());
  w.edges(st.internal.edges());
  w.u64(st.codes.size());
  for (const auto& c : st.codes) {
    w.value(st.ring, c.scalar);
    w.u32(c.degree());
    for (const auto& f : c.factors) w.values(st.ring, f.entries);
  }
  w.flags(st.start_eligible);
  w.values(st.ring, st.Q);
  w.values(st.ring, st.S);
  w.values(st.ring, st.F);
  w.values(st.ring, st.Z);
}

template <class Ring>
KPathState<Ring> read_kpath(Reader& r, Ring ring) {
  KPathState<Ring> st;
  st.mode = std::is_same_v<Ring, Gf2mRing> ? Mode::kRandomized : Mode::kDeterministic;
  st.k = r.u32();
  st.dims = r.u32();
  st.max_len = r.u32();
  const auto n = r.u32();
  st.seed = r.u64();
  if constexpr (std::is_same_v<Ring, Gf2mRing>) ring = r.field();
  st.ring = std::move(ring);
  const auto embedding = r.u8();
  const auto target = r.u8();
  if (embedding > 2 || target > 1) throw FormatError("unknown embedding or target");
  st.embedding = static_cast<Embedding>(embedding);
  st.target = static_cast<Target>(target);
  st.graded = r.u8() != 0;
  st.target_grade = r.u32();
  st.unit_weights = r.u8() != 0;
  if (st.dims > kMaxDims) throw FormatError("dimension out of range");
  st.graph = r.template graph<DirectedGraph>(n);
  const auto internal_n = r.u32();
  st.internal = r.template graph<DirectedGraph>(internal_n);
  st.codes.resize(r.count(4));
  for (auto& c : st.codes) {
    r.value(st.ring, c.scalar);
    c.factors.resize(r.u32());
    for (auto& f : c.factors) {
      r.values(st.ring, f.entries);
      if (f.entries.size() != st.dims) throw FormatError("code dimension mismatch");
    }
  }
  st.start_eligible = r.flags();
  r.values(st.ring, st.Q);
  r.values(st.ring, st.S);
  r.values(st.ring, st.F);
  r.values(st.ring, st.Z);
  const auto stride = st.stride();
  const std::size_t in = internal_n;
  if (st.codes.size() != in || st.start_eligible.size() != in || st.Q.size() != in * in * stride ||
      st.S.size() != in * stride || st.F.size() != in * stride || st.Z.size() != stride) {
    throw FormatError("state arrays have inconsistent sizes");
  }
  return st;
}

void write_poly(Writer& w, const Gf2mRing& ring, const UPoly& p) {
  w.u32(p.degree_bound());
  for (unsigned g = 0; g <= p.degree_bound(); ++g) w.values(ring, p[g].coeffs());
}

UPoly read_poly(Reader& r, const Gf2mRing& ring, unsigned dims, unsigned bound) {
  if (r.u32() != bound) throw FormatError("polynomial degree mismatch");
  UPoly p(ring, dims, bound);
  for (unsigned g = 0; g <= bound; ++g) {
    r.values(ring, p[g].coeffs());
    if (p[g].size() != (std::size_t{1} << dims)) throw FormatError("polynomial coefficient size mismatch");
  }
  return p;
}

}  // namespace

struct UndirectedAccess {
  static void write(Writer& w, const UndirectedOracle& o) {
    w.header(StateKind::kUndirected);
    w.u32(o.k_);
    w.u32(o.k1_);
    w.u32(o.k2_);
    w.u32(o.graph_.num_vertices());
    w.u64(o.seed_);
    w.field(o.ring_);
    w.u8(o.bipartite_ ? 1 : 0);
    w.u8(o.always_yes_ ? 1 : 0);
    w.u32(o.num_trials_);
    w.edges(o.graph_.edges());
    w.u64(o.fixed_sides_.size());
    for (const auto& s : o.fixed_sides_) w.flags(s);
    w.u64(o.trials_.size());
    for (const auto& p : o.trials_) {
      w.u64(p.seed);
      w.flags(p.side);
      w.values(o.ring_, p.vertex_var);
      w.u64(p.Q.size());
      for (const auto& q : p.Q) write_poly(w, o.ring_, q);
      w.u64(p.S.size());
      for (const auto& q : p.S) write_poly(w, o.ring_, q);
      w.u64(p.Sbold.size());
      for (const auto& q : p.Sbold) write_poly(w, o.ring_, q);
      write_poly(w, o.ring_, p.Z);
    }
  }

  static UndirectedOracle read(Reader& r) {
    UndirectedOracle o;
    o.k_ = r.u32();
    o.k1_ = r.u32();
    o.k2_ = r.u32();
    const auto n = r.u32();
    o.seed_ = r.u64();
    o.ring_ = r.field();
    o.bipartite_ = r.u8() != 0;
    o.always_yes_ = r.u8() != 0;
    o.num_trials_ = r.u32();
    if (o.dims() > kMaxDims) throw FormatError("dimension out of range");
    o.graph_ = r.graph<UndirectedGraph>(n);
    o.fixed_sides_.resize(r.count(8));
    for (auto& s : o.fixed_sides_) s = r.flags();
    o.trials_.resize(r.count(8));
    const unsigned D = o.dims();
    for (auto& p : o.trials_) {
      p.seed = r.u64();
      p.side = r.flags();
      r.values(o.ring_, p.vertex_var);
      p.Q.resize(r.count(4));
      for (auto& q : p.Q) q = read_poly(r, o.ring_, D, o.k_);
      p.S.resize(r.count(4));
      for (auto& q : p.S) q = read_poly(r, o.ring_, D, o.k_);
      p.Sbold.resize(r.count(4));
      for (auto& q : p.Sbold) q = read_poly(r, o.ring_, D, o.k_);
      p.Z = read_poly(r, o.ring_, D, o.k_);
      const std::size_t nn = n;
      if (p.side.size() != nn || p.vertex_var.size() != nn || p.Q.size() != nn * nn || p.S.size() != nn ||
          p.Sbold.size() != nn) {
        throw FormatError("partition arrays have inconsistent sizes");
      }
    }
    return o;
  }
};

std::vector<std::uint8_t> serialize(const RandomizedState& state) {
  Writer w;
  write_kpath(w, state);
  return w.take();
}

std::vector<std::uint8_t> serialize(const DeterministicState& state) {
  Writer w;
  write_kpath(w, state);
  return w.take();
}

std::vector<std::uint8_t> serialize(const AnyKPathState& state) {
  return std::visit([](const auto& st) { return serialize(st); }, state);
}

std::vector<std::uint8_t> serialize(const UndirectedOracle& oracle) {
  Writer w;
  UndirectedAccess::write(w, oracle);
  return w.take();
}

StateKind peek_kind(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  return r.header();
}

AnyKPathState deserialize_kpath(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  const auto kind = r.header();
  AnyKPathState out;
  if (kind == StateKind::kRandomized) {
    out = read_kpath(r, Gf2mRing{});
  } else if (kind == StateKind::kDeterministic) {
    out = read_kpath(r, IntegerRing{});
  } else {
    throw FormatError("expected a directed k-path state");
  }
  r.finish();
  return out;
}

UndirectedOracle deserialize_undirected(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  if (r.header() != StateKind::kUndirected) throw FormatError("expected an undirected k-path state");
  auto o = UndirectedAccess::read(r);
  r.finish();
  return o;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace extensor
