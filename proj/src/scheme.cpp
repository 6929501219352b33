#include "assoc/scheme.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace assoc {

RelationIndexMatrix RelationIndexMatrix::filled(int n, int d,
                                                std::int32_t value) {
  RelationIndexMatrix r;
  r.n = n;
  r.d = d;
  r.idx.assign(static_cast<size_t>(n) * n, value);
  return r;
}

std::string SchemeViolation::message() const {
  char buf[256];
  switch (kind) {
    case Kind::BadShape:
      std::snprintf(buf, sizeof(buf),
                    "malformed relation matrix: need n >= 1, 1 <= d < n and "
                    "n*n entries (n=%d, d=%d)",
                    x, y);
      break;
    case Kind::BadEntry:
      std::snprintf(buf, sizeof(buf),
                    "relation index out of range [0,d] at (%d,%d)", x, y);
      break;
    case Kind::NonzeroDiagonal:
      std::snprintf(buf, sizeof(buf),
                    "diagonal entry (%d,%d) must lie in relation 0", x, x);
      break;
    case Kind::Asymmetric:
      std::snprintf(buf, sizeof(buf),
                    "relation matrix not symmetric at (%d,%d)", x, y);
      break;
    case Kind::MissingRelation:
      std::snprintf(buf, sizeof(buf), "relation %d never occurs", i);
      break;
    case Kind::NotConstant:
      std::snprintf(buf, sizeof(buf),
                    "intersection count for (h=%d,i=%d,j=%d) is not constant: "
                    "pair (%d,%d) gives %lld but pair (%d,%d) gives %lld",
                    h, i, j, x, y, count1, x2, y2, count2);
      break;
  }
  return buf;
}

AssociationScheme AssociationScheme::trusted(RelationIndexMatrix rel) {
  return AssociationScheme(std::move(rel));
}

namespace {

std::optional<SchemeViolation> check_well_formed(
    const RelationIndexMatrix& rel) {
  SchemeViolation v{};
  if (rel.n < 1 || rel.d < 1 || rel.d >= rel.n ||
      rel.idx.size() != static_cast<size_t>(rel.n) * rel.n) {
    v.kind = SchemeViolation::Kind::BadShape;
    v.x = rel.n;
    v.y = rel.d;
    return v;
  }
  for (int x = 0; x < rel.n; ++x) {
    for (int y = 0; y < rel.n; ++y) {
      std::int32_t e = rel.at(x, y);
      if (e < 0 || e > rel.d) {
        v.kind = SchemeViolation::Kind::BadEntry;
        v.x = x;
        v.y = y;
        return v;
      }
    }
  }
  for (int x = 0; x < rel.n; ++x) {
    if (rel.at(x, x) != 0) {
      v.kind = SchemeViolation::Kind::NonzeroDiagonal;
      v.x = x;
      v.y = x;
      return v;
    }
  }
  for (int x = 0; x < rel.n; ++x) {
    for (int y = x + 1; y < rel.n; ++y) {
      if (rel.at(x, y) != rel.at(y, x)) {
        v.kind = SchemeViolation::Kind::Asymmetric;
        v.x = x;
        v.y = y;
        return v;
      }
    }
  }
  std::vector<char> seen(rel.d + 1, 0);
  for (std::int32_t e : rel.idx) seen[e] = 1;
  for (int i = 0; i <= rel.d; ++i) {
    if (!seen[i]) {
      v.kind = SchemeViolation::Kind::MissingRelation;
      v.i = i;
      return v;
    }
  }
  return std::nullopt;
}

// Reference counts per class h from one representative pair each. Dense
// (d+1)^2 tables for small d, hash maps otherwise.
struct ReferenceCounts {
  int classes = 0;
  bool dense = false;
  std::vector<std::int64_t> dense_counts;  // classes * classes per h
  std::vector<std::unordered_map<std::int64_t, std::int64_t>> sparse_counts;
  std::vector<std::pair<int, int>> rep;  // representative pair per h
  std::vector<int> support;              // # of nonzero (i,j) per h

  std::int64_t get(int h, int i, int j) const {
    if (dense) {
      return dense_counts[(static_cast<size_t>(h) * classes + i) * classes +
                          j];
    }
    auto it = sparse_counts[h].find(static_cast<std::int64_t>(i) * classes + j);
    return it == sparse_counts[h].end() ? 0 : it->second;
  }
};

ReferenceCounts reference_counts(const RelationIndexMatrix& rel) {
  ReferenceCounts rc;
  rc.classes = rel.d + 1;
  rc.dense = rc.classes <= kMaxDenseClasses;
  rc.rep.assign(rc.classes, {-1, -1});
  rc.support.assign(rc.classes, 0);
  if (rc.dense) {
    rc.dense_counts.assign(
        static_cast<size_t>(rc.classes) * rc.classes * rc.classes, 0);
  } else {
    rc.sparse_counts.resize(rc.classes);
  }
  for (int x = 0; x < rel.n && static_cast<int>(std::count_if(
                                   rc.rep.begin(), rc.rep.end(),
                                   [](auto& p) { return p.first >= 0; })) <
                                   rc.classes;
       ++x) {
    for (int y = 0; y < rel.n; ++y) {
      int h = rel.at(x, y);
      if (rc.rep[h].first < 0) rc.rep[h] = {x, y};
    }
  }
  for (int h = 0; h < rc.classes; ++h) {
    auto [x, y] = rc.rep[h];
    for (int z = 0; z < rel.n; ++z) {
      int i = rel.at(x, z), j = rel.at(z, y);
      if (rc.dense) {
        auto& c = rc.dense_counts[(static_cast<size_t>(h) * rc.classes + i) *
                                      rc.classes +
                                  j];
        if (c == 0) ++rc.support[h];
        ++c;
      } else {
        auto& c = rc.sparse_counts[h][static_cast<std::int64_t>(i) *
                                          rc.classes +
                                      j];
        if (c == 0) ++rc.support[h];
        ++c;
      }
    }
  }
  return rc;
}

// Count table for one ordered pair, reused across pairs via epoch stamps.
struct PairCounter {
  int classes;
  std::vector<std::int64_t> count;
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<std::int64_t> touched;

  explicit PairCounter(int classes_)
      : classes(classes_),
        count(static_cast<size_t>(classes_) * classes_, 0),
        stamp(static_cast<size_t>(classes_) * classes_, 0) {}

  void reset() {
    ++epoch;
    touched.clear();
  }
  void add(int i, int j) {
    size_t key = static_cast<size_t>(i) * classes + j;
    if (stamp[key] != epoch) {
      stamp[key] = epoch;
      count[key] = 0;
      touched.push_back(static_cast<std::int64_t>(key));
    }
    ++count[key];
  }
};

std::optional<SchemeViolation> check_pair(const RelationIndexMatrix& rel,
                                          const ReferenceCounts& rc,
                                          PairCounter& pc, int x, int y) {
  int h = rel.at(x, y);
  pc.reset();
  for (int z = 0; z < rel.n; ++z) pc.add(rel.at(x, z), rel.at(z, y));

  auto mismatch = [&](int i, int j, std::int64_t got) {
    SchemeViolation v{};
    v.kind = SchemeViolation::Kind::NotConstant;
    v.h = h;
    v.i = i;
    v.j = j;
    v.x = x;
    v.y = y;
    v.count1 = got;
    v.x2 = rc.rep[h].first;
    v.y2 = rc.rep[h].second;
    v.count2 = rc.get(h, i, j);
    return v;
  };

  bool counts_differ =
      static_cast<int>(pc.touched.size()) != rc.support[h];
  if (!counts_differ) {
    for (std::int64_t key : pc.touched) {
      if (pc.count[key] != rc.get(h, static_cast<int>(key / pc.classes),
                                  static_cast<int>(key % pc.classes))) {
        counts_differ = true;
        break;
      }
    }
  }
  if (counts_differ) {
    // report the lexicographically first (i,j) whose count differs
    for (int i = 0; i < pc.classes; ++i) {
      for (int j = 0; j < pc.classes; ++j) {
        std::int64_t want = rc.get(h, i, j);
        size_t key = static_cast<size_t>(i) * pc.classes + j;
        std::int64_t got = pc.stamp[key] == pc.epoch ? pc.count[key] : 0;
        if (got != want) return mismatch(i, j, got);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyOutcome verify_scheme(const RelationIndexMatrix& rel) {
  VerifyOutcome out;
  if (auto v = check_well_formed(rel)) {
    out.violation = *v;
    return out;
  }

  ReferenceCounts rc = reference_counts(rel);
  PairCounter pc(rel.d + 1);

  if (rel.n <= 512) {
    for (int x = 0; x < rel.n; ++x) {
      for (int y = 0; y < rel.n; ++y) {
        if (auto v = check_pair(rel, rc, pc, x, y)) {
          out.violation = *v;
          return out;
        }
      }
    }
  } else {
    // sampled verification, deterministic
    std::mt19937_64 rng(0xC0FFEE0Dull);
    std::uniform_int_distribution<int> pick(0, rel.n - 1);
    int samples = 8 * rel.n;
    for (int t = 0; t < samples; ++t) {
      int x = pick(rng), y = pick(rng);
      if (auto v = check_pair(rel, rc, pc, x, y)) {
        out.violation = *v;
        return out;
      }
    }
  }

  out.scheme = AssociationScheme::trusted(rel);
  if (rel.d + 1 <= kMaxDenseClasses) {
    SchemeParameters params;
    params.d = rel.d;
    params.p = Tensor3<std::int64_t>(rel.d + 1, 0);
    for (int h = 0; h <= rel.d; ++h) {
      for (int i = 0; i <= rel.d; ++i) {
        for (int j = 0; j <= rel.d; ++j) {
          params.p.at(h, i, j) = rc.get(h, i, j);
        }
      }
    }
    params.k.resize(rel.d + 1);
    for (int i = 0; i <= rel.d; ++i) params.k[i] = params.p.at(0, i, i);
    out.params = std::move(params);
  }
  return out;
}

AssociationScheme make_scheme(RelationIndexMatrix rel) {
  VerifyOutcome out = verify_scheme(rel);
  if (!out.ok()) throw SchemeError(*out.violation);
  return *std::move(out.scheme);
}

SchemeParameters intersection_numbers(const AssociationScheme& s) {
  if (s.d() + 1 > kMaxDenseClasses) {
    throw std::invalid_argument(
        "class count too large for dense intersection tensor (d+1 > " +
        std::to_string(kMaxDenseClasses) + ")");
  }
  ReferenceCounts rc = reference_counts(s.relations());
  SchemeParameters params;
  params.d = s.d();
  params.p = Tensor3<std::int64_t>(s.d() + 1, 0);
  for (int h = 0; h <= s.d(); ++h) {
    for (int i = 0; i <= s.d(); ++i) {
      for (int j = 0; j <= s.d(); ++j) params.p.at(h, i, j) = rc.get(h, i, j);
    }
  }
  params.k.resize(s.d() + 1);
  for (int i = 0; i <= s.d(); ++i) params.k[i] = params.p.at(0, i, i);
  return params;
}

std::vector<std::uint8_t> associate_matrix(const AssociationScheme& s, int i) {
  if (i < 0 || i > s.d()) {
    throw std::out_of_range("relation index " + std::to_string(i) +
                            " out of range [0," + std::to_string(s.d()) + "]");
  }
  std::vector<std::uint8_t> a(static_cast<size_t>(s.n()) * s.n(), 0);
  for (int x = 0; x < s.n(); ++x) {
    for (int y = 0; y < s.n(); ++y) {
      if (s.relation(x, y) == i) a[static_cast<size_t>(x) * s.n() + y] = 1;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// scm-v1

RelationIndexMatrix read_scm(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out_line) -> bool {
    while (std::getline(in, out_line)) {
      size_t first = out_line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;  // blank
      if (out_line[first] == '#') continue;      // comment
      return true;
    }
    return false;
  };

  if (!next_data_line(line)) throw ScmParseError("empty scm input");
  std::istringstream header(line);
  long long n = 0, d = 0;
  if (!(header >> n >> d)) throw ScmParseError("bad header, expected \"n d\"");
  std::string extra;
  if (header >> extra) throw ScmParseError("trailing tokens after header");
  if (n < 1 || n > 4096 || d < 1 || d >= n) {
    throw ScmParseError("header out of range: n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
  }

  RelationIndexMatrix rel =
      RelationIndexMatrix::filled(static_cast<int>(n), static_cast<int>(d));
  for (int x = 0; x < rel.n; ++x) {
    if (!next_data_line(line)) {
      throw ScmParseError("unexpected end of input at row " +
                          std::to_string(x));
    }
    std::istringstream row(line);
    for (int y = 0; y < rel.n; ++y) {
      long long e;
      if (!(row >> e)) {
        throw ScmParseError("row " + std::to_string(x) + " has fewer than " +
                            std::to_string(rel.n) + " entries");
      }
      if (e < 0 || e > rel.d) {
        throw ScmParseError("entry " + std::to_string(e) + " at (" +
                            std::to_string(x) + "," + std::to_string(y) +
                            ") outside [0," + std::to_string(rel.d) + "]");
      }
      rel.at(x, y) = static_cast<std::int32_t>(e);
    }
    if (row >> extra) {
      throw ScmParseError("row " + std::to_string(x) + " has more than " +
                          std::to_string(rel.n) + " entries");
    }
  }
  if (next_data_line(line)) throw ScmParseError("trailing data after matrix");
  return rel;
}

RelationIndexMatrix read_scm_string(const std::string& text) {
  std::istringstream in(text);
  return read_scm(in);
}

RelationIndexMatrix read_scm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScmParseError("cannot open " + path);
  return read_scm(in);
}

std::string write_scm(const RelationIndexMatrix& rel,
                      const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << rel.n << " " << rel.d << "\n";
  for (int x = 0; x < rel.n; ++x) {
    for (int y = 0; y < rel.n; ++y) {
      if (y) out << ' ';
      out << rel.at(x, y);
    }
    out << "\n";
  }
  return out.str();
}

void write_scm_file(const std::string& path, const RelationIndexMatrix& rel,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_scm(rel, comments);
}

}  // namespace assoc
