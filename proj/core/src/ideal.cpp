#include "liaison/ideal.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace liaison {

namespace {

std::mutex g_store_mutex;
std::optional<std::string> g_store_dir;

std::optional<std::string> store_dir() {
  std::lock_guard lock(g_store_mutex);
  return g_store_dir;
}

std::string order_spec(const Ring& R) {
  std::ostringstream os;
  os << (R.order().kind() == MonomialOrder::Kind::kGrevlex ? "grevlex" : "elim");
  for (const auto& b : R.order().blocks()) {
    os << " [";
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ']';
  }
  return os.str();
}

std::string store_key(const Ring& R, const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  os << "p=" << R.field().p() << " blocks=" << R.block_spec() << " order=" << order_spec(R) << '\n';
  for (const auto& g : gens) os << g.to_string(Polynomial::Residues::kLeast) << '\n';
  return os.str();
}

std::string hex_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<GroebnerBasis> load_stored(const std::string& dir, const RingPtr& R, const std::string& key) {
  std::ifstream in(std::filesystem::path(dir) / (hex_hash(key) + ".gb"));
  if (!in) return std::nullopt;
  std::ostringstream stored_key;
  std::string line;
  std::size_t key_lines = static_cast<std::size_t>(std::count(key.begin(), key.end(), '\n'));
  for (std::size_t i = 0; i < key_lines && std::getline(in, line); ++i) stored_key << line << '\n';
  if (stored_key.str() != key || !std::getline(in, line) || line != "--") return std::nullopt;
  std::vector<Polynomial> elems;
  while (std::getline(in, line)) {
    if (!line.empty()) elems.push_back(parse_polynomial(R, line));
  }
  return GroebnerBasis(R, std::move(elems));
}

void save_stored(const std::string& dir, const std::string& key, const GroebnerBasis& gb) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = std::filesystem::path(dir) / (hex_hash(key) + ".gb");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << key << "--\n";
    for (const auto& g : gb.elements()) out << g.to_string(Polynomial::Residues::kLeast) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

void set_groebner_cache_directory(std::optional<std::string> dir) {
  std::lock_guard lock(g_store_mutex);
  g_store_dir = std::move(dir);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, bool saturated)
    : ring_(std::move(ring)), saturated_(saturated), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw Error(ErrorCode::kHomogeneity, "ideal generator " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::from_groebner(GroebnerBasis gb, bool saturated) {
  Ideal I(gb.ring(), gb.elements(), saturated);
  std::call_once(I.cache_->once, [&] { I.cache_->gb.emplace(std::move(gb)); });
  return I;
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return from_groebner(GroebnerBasis(ring, {one}), true);
}

Ideal Ideal::marked_saturated() const {
  Ideal I = *this;
  I.saturated_ = true;
  return I;
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    if (gens_.empty()) {
      cache_->gb.emplace(ring_, std::vector<Polynomial>{});
      return;
    }
    auto dir = store_dir();
    std::string key;
    if (dir) {
      key = store_key(*ring_, gens_);
      if (auto gb = load_stored(*dir, ring_, key)) {
        cache_->gb.emplace(std::move(*gb));
        return;
      }
    }
    cache_->gb.emplace(buchberger(gens_));
    if (dir) save_stored(*dir, key, *cache_->gb);
  });
  return *cache_->gb;
}

bool Ideal::has_groebner() const { return cache_->gb.has_value(); }

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  return groebner().contains(f);
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

HilbertNumerator Ideal::hilbert() const {
  auto lm = groebner().leading_monomials();
  return HilbertNumerator(*ring_, lm);
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return a.groebner() == b.groebner();
}

void write_ideal(std::ostream& out, const Ideal& I) {
  out << "ring p=" << I.ring()->field().p() << " blocks=" << I.ring()->block_spec() << '\n';
  for (const auto& g : I.generators()) out << g.to_string(Polynomial::Residues::kLeast) << '\n';
}

RingPtr parse_ring(std::uint64_t p, const std::string& blocks) {
  static const std::regex block_re(R"(([A-Za-z_][A-Za-z_]*):(\d+):\(([-\d,]+)\))");
  PrimeField F(p);
  std::vector<VariableBlock> bl;
  std::istringstream ss(blocks);
  std::string tok;
  while (ss >> tok) {
    std::smatch m;
    if (!std::regex_match(tok, m, block_re)) throw Error(ErrorCode::kParse, "bad block spec " + tok);
    VariableBlock b;
    b.name = m[1];
    b.count = std::stoi(m[2]);
    std::istringstream ds(m[3]);
    std::string d;
    while (std::getline(ds, d, ',')) b.degree.push_back(std::stoi(d));
    bl.push_back(std::move(b));
  }
  if (bl.empty()) throw Error(ErrorCode::kParse, "ring has no blocks");
  Ambient amb = Ambient::kElim;
  if (bl.size() == 2 && bl[0].name == "x" && bl[0].count == 2 && bl[0].degree == Multidegree{1, 0} &&
      bl[1].name == "y" && bl[1].count == 3 && bl[1].degree == Multidegree{0, 1}) {
    amb = Ambient::kP1xP2;
  } else if (bl.size() == 1 && bl[0].degree == Multidegree{1}) {
    amb = Ambient::kPn;
  }
  return Ring::make(F, std::move(bl), amb);
}

Ideal read_ideal(std::istream& in) {
  static const std::regex header_re(R"(ring\s+p=(\d+)\s+blocks=(.*))");
  std::string line;
  RingPtr R;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!R) {
      std::smatch m;
      if (!std::regex_match(line, m, header_re)) throw Error(ErrorCode::kParse, "missing ring header");
      R = parse_ring(std::stoull(m[1]), m[2]);
      continue;
    }
    gens.push_back(parse_polynomial(R, line));
  }
  if (!R) throw Error(ErrorCode::kParse, "empty ideal file");
  return Ideal(R, std::move(gens));
}

}  // namespace liaison
