#include "ybe/ybe.h"

#include "ybe/crypto.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/error.hpp"
#include "ybe/lazy_tree.hpp"
#include "ybe/pump.hpp"
#include "ybe/solution_io.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

struct ybe_solution {
  std::shared_ptr<const ybe::Solution> value;
};

struct ybe_key {
  ybe::LazyKey value;
};

struct ybe_census {
  ybe::SolutionCensus value;
};

namespace {

constexpr std::uint64_t kDefaultMaxPoints = 1'000'000;

thread_local std::string last_error;

ybe_status status_of(ybe::ErrorCode code) {
  switch (code) {
    case ybe::ErrorCode::InvalidArgument: return YBE_ERR_INVALID_ARGUMENT;
    case ybe::ErrorCode::OutOfRange: return YBE_ERR_OUT_OF_RANGE;
    case ybe::ErrorCode::SizeMismatch: return YBE_ERR_SIZE_MISMATCH;
    case ybe::ErrorCode::NotBijective: return YBE_ERR_NOT_BIJECTIVE;
    case ybe::ErrorCode::ParseError: return YBE_ERR_PARSE;
    case ybe::ErrorCode::NotASolution: return YBE_ERR_NOT_A_SOLUTION;
    case ybe::ErrorCode::LimitExceeded: return YBE_ERR_LIMIT_EXCEEDED;
    case ybe::ErrorCode::Io: return YBE_ERR_IO;
  }
  return YBE_ERR_INTERNAL;
}

template <typename F>
ybe_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return YBE_OK;
  } catch (const ybe::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return YBE_ERR_LIMIT_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return YBE_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ybe::Error(ybe::ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  require(out, "output pointer");
  *out = dup(s);
}

std::uint64_t bound_or_default(std::uint64_t max_points) {
  return max_points == 0 ? kDefaultMaxPoints : max_points;
}

ybe::CostConstants constants_of(const ybe_cost_constants* c) {
  ybe::CostConstants out;
  if (c) {
    out.op_seconds = c->op_seconds;
    out.search_seconds = c->search_seconds;
  }
  return out;
}

std::string word_text(const ybe::Word& w) {
  std::string out;
  for (ybe::Point x : w) out += "x_" + std::to_string(x);
  return out;
}

std::string pair_text(std::uint64_t n, std::uint64_t m) {
  auto [i, k] = ybe::renumber_point(n, m);
  return "T_" + std::to_string(i) + "^" + std::to_string(k);
}

std::string big_text(const ybe::BigInt& v) { return v.str(); }

std::string g_pair_name(std::uint64_t n, const ybe::BigInt& index) {
  auto [i, k] = ybe::renumber_point(n, index.convert_to<std::uint64_t>());
  return "g_" + std::to_string(i) + "^" + std::to_string(k);
}

ybe::CycleType parse_cycle_type(std::uint64_t size, std::string_view text) {
  ybe::CycleType t;
  t.size = size;
  std::string normalized(text);
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::string term;
  while (in >> term) {
    const auto caret = term.find('^');
    if (caret == std::string::npos) {
      throw ybe::Error(ybe::ErrorCode::ParseError, "cycle type terms look like d^count: '" + term + "'");
    }
    const auto d = ybe::parse_bigint(term.substr(0, caret)).convert_to<std::size_t>();
    const auto count = ybe::parse_bigint(term.substr(caret + 1)).convert_to<std::size_t>();
    if (d == 0) throw ybe::Error(ybe::ErrorCode::InvalidArgument, "cycle length must be positive");
    t.multiplicities[d] += count;
  }
  return t;
}

}  // namespace

extern "C" {

const char* ybe_last_error(void) { return last_error.c_str(); }

const char* ybe_status_name(ybe_status status) {
  switch (status) {
    case YBE_OK: return "ok";
    case YBE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case YBE_ERR_OUT_OF_RANGE: return "out of range";
    case YBE_ERR_SIZE_MISMATCH: return "size mismatch";
    case YBE_ERR_NOT_BIJECTIVE: return "not bijective";
    case YBE_ERR_PARSE: return "parse error";
    case YBE_ERR_NOT_A_SOLUTION: return "not a solution";
    case YBE_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case YBE_ERR_IO: return "i/o error";
    case YBE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ybe_string_free(char* s) { std::free(s); }

ybe_status ybe_solution_parse(const char* text, ybe_solution** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new ybe_solution{std::make_shared<const ybe::Solution>(ybe::parse_solution(text))};
  });
}

ybe_status ybe_solution_load(const char* path, ybe_solution** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output pointer");
    *out = new ybe_solution{std::make_shared<const ybe::Solution>(ybe::load_solution(path))};
  });
}

ybe_status ybe_solution_from_sigma(size_t n, const uint32_t* sigma_images, ybe_solution** out) {
  return guarded([&] {
    require(sigma_images, "images");
    require(out, "output pointer");
    if (n == 0) throw ybe::Error(ybe::ErrorCode::InvalidArgument, "n must be positive");
    std::vector<ybe::Permutation> sigma;
    for (size_t x = 0; x < n; ++x) {
      sigma.push_back(ybe::Permutation::from_images(
          std::vector<ybe::Point>(sigma_images + x * n, sigma_images + (x + 1) * n)));
    }
    *out = new ybe_solution{std::make_shared<const ybe::Solution>(ybe::Solution::from_sigma(sigma))};
  });
}

ybe_status ybe_solution_format(const ybe_solution* s, const char* comment, char** out) {
  return guarded([&] {
    require(s, "solution");
    std::vector<std::string> comments;
    if (comment) comments.emplace_back(comment);
    emit(out, ybe::format_solution(*s->value, comments));
  });
}

ybe_status ybe_solution_save(const ybe_solution* s, const char* path, const char* comment) {
  return guarded([&] {
    require(s, "solution");
    require(path, "path");
    std::vector<std::string> comments;
    if (comment) comments.emplace_back(comment);
    ybe::save_solution(path, *s->value, comments);
  });
}

size_t ybe_solution_size(const ybe_solution* s) { return s ? s->value->size() : 0; }

namespace {

ybe_status copy_family(const ybe_solution* s, uint32_t x, uint32_t* images, bool sigma) {
  return guarded([&] {
    require(s, "solution");
    require(images, "images");
    if (x < 1 || x > s->value->size()) {
      throw ybe::Error(ybe::ErrorCode::OutOfRange, "index " + std::to_string(x) + " outside 1.." +
                                                       std::to_string(s->value->size()));
    }
    const auto& p = sigma ? s->value->sigma(x) : s->value->gamma(x);
    std::copy(p.images().begin(), p.images().end(), images);
  });
}

}  // namespace

ybe_status ybe_solution_sigma(const ybe_solution* s, uint32_t x, uint32_t* images) {
  return copy_family(s, x, images, true);
}

ybe_status ybe_solution_gamma(const ybe_solution* s, uint32_t x, uint32_t* images) {
  return copy_family(s, x, images, false);
}

void ybe_solution_free(ybe_solution* s) { delete s; }

ybe_status ybe_verify(const ybe_solution* s, ybe_verify_report* out) {
  return guarded([&] {
    require(s, "solution");
    require(out, "report");
    const ybe::VerifyReport v = ybe::verify(*s->value);
    *out = ybe_verify_report{};
    out->nondegenerate = v.nondegenerate;
    out->involutive = v.involutive;
    out->braided = v.braided;
    if (v.involutive_witness) {
      out->has_involutive_witness = 1;
      out->involutive_witness[0] = v.involutive_witness->first;
      out->involutive_witness[1] = v.involutive_witness->second;
    }
    if (v.braided_witness) {
      out->has_braided_witness = 1;
      std::copy(v.braided_witness->begin(), v.braided_witness->end(), out->braided_witness);
    }
  });
}

ybe_status ybe_analyze(const ybe_solution* s, ybe_analysis* out) {
  return guarded([&] {
    require(s, "solution");
    require(out, "report");
    const ybe::AnalysisReport r = ybe::analyze(*s->value);
    *out = ybe_analysis{};
    out->nondegenerate = r.nondegenerate;
    out->involutive = r.involutive;
    out->braided = r.braided;
    out->class_m = r.class_m ? static_cast<int64_t>(*r.class_m) : -1;
    out->indecomposable = r.indecomposable;
    out->retract_level = r.retract_level ? static_cast<int64_t>(*r.retract_level) : -1;
    out->condition_C = r.condition_C;
    out->condition_C_column = r.condition_C_column ? static_cast<int64_t>(*r.condition_C_column) : -1;
    out->iyb_order = r.iyb_order;
    if (r.nondegenerate && r.involutive && r.braided) {
      out->column_pair_condition = ybe::column_pair_condition(*s->value);
    }
  });
}

ybe_status ybe_frozen_elements(const ybe_solution* s, size_t m, char** out) {
  return guarded([&] {
    require(s, "solution");
    std::string text;
    for (const auto& w : ybe::frozen_elements(*s->value, m)) {
      if (!text.empty()) text += ' ';
      text += word_text(w);
    }
    emit(out, text);
  });
}

ybe_status ybe_class_witness(const ybe_solution* s, uint32_t x, char** out) {
  return guarded([&] {
    require(s, "solution");
    const auto m = ybe::class_of(*s->value);
    if (!m) throw ybe::Error(ybe::ErrorCode::LimitExceeded, "class search cap exceeded");
    if (x < 1 || x > s->value->size()) throw ybe::Error(ybe::ErrorCode::OutOfRange, "point out of range");
    const auto words = ybe::frozen_elements(*s->value, *m);
    std::string text;
    for (ybe::Point y : words[x - 1]) text += "sigma_" + std::to_string(y) + " ";
    emit(out, text + "= Id");
  });
}

ybe_status ybe_orbits(const ybe_solution* s, char** out) {
  return guarded([&] {
    require(s, "solution");
    std::string text;
    for (const auto& orbit : ybe::orbits(*s->value)) {
      if (!text.empty()) text += ' ';
      text += '{';
      for (size_t t = 0; t < orbit.size(); ++t) text += (t ? "," : "") + std::to_string(orbit[t]);
      text += '}';
    }
    emit(out, text);
  });
}

ybe_status ybe_orbit_table(const ybe_solution* s, char** out) {
  return guarded([&] {
    require(s, "solution");
    const ybe::OrbitTable table = ybe::table_T(*s->value);
    std::string text;
    for (size_t l = 0; l < table.columns.size(); ++l) {
      text += std::to_string(l + 1) + ":";
      for (ybe::Point x : table.columns[l]) text += " " + std::to_string(x);
      text += '\n';
    }
    emit(out, text);
  });
}

ybe_status ybe_pump(const ybe_solution* s, unsigned iterations, uint64_t max_points,
                    ybe_solution** out) {
  return guarded([&] {
    require(s, "solution");
    require(out, "output pointer");
    ybe::Solution pumped = ybe::pump_iterate(*s->value, iterations, bound_or_default(max_points));
    *out = new ybe_solution{std::make_shared<const ybe::Solution>(std::move(pumped))};
  });
}

ybe_status ybe_g_cycles(const ybe_solution* s, uint32_t i, uint32_t k, int pair_notation, char** out) {
  return guarded([&] {
    require(s, "solution");
    const ybe::Permutation g = ybe::g_of(*s->value, i, k);
    emit(out, pair_notation ? ybe::format_pair_cycles(g, s->value->size())
                            : ybe::format_perm(g, ybe::PermStyle::CyclesVerbose));
  });
}

ybe_status ybe_structure_relations(const ybe_solution* s, char** out) {
  return guarded([&] {
    require(s, "solution");
    ybe::require_solution(*s->value);
    std::string text;
    for (const auto& r : ybe::structure_relations(*s->value)) {
      text += word_text({r.lhs.first, r.lhs.second}) + " = " +
              word_text({r.rhs.first, r.rhs.second}) + "\n";
    }
    emit(out, text);
  });
}

ybe_status ybe_frt_relations(const ybe_solution* s, char** out, int* ok) {
  return guarded([&] {
    require(s, "solution");
    const ybe::FrtResult result = ybe::frt_relations(*s->value);
    const std::uint64_t n = s->value->size();
    std::string text;
    for (const auto& r : result.relations) {
      text += pair_text(n, r.lhs.first) + pair_text(n, r.lhs.second) + " = " +
              pair_text(n, r.rhs.first) + pair_text(n, r.rhs.second) + "\n";
    }
    const ybe::FrtReport& rep = result.report;
    auto tally = [](const ybe::SignTally& t) {
      return "plus " + std::to_string(t.plus) + " minus " + std::to_string(t.minus) + " zero " +
             std::to_string(t.zero) + " other " + std::to_string(t.other);
    };
    text += "# elements " + std::to_string(rep.elements) + "\n";
    text += "# zero_elements " + std::to_string(rep.zero_elements) + "\n";
    text += "# classes " + std::to_string(rep.classes) + " (expected " +
            std::to_string(rep.expected_classes) + ")\n";
    text += std::string("# same_family ") + (rep.same_family ? "true" : "false") + "\n";
    text += "# negation_i " + tally(rep.negation_i) + "\n";
    text += "# negation_ii " + tally(rep.negation_ii) + "\n";
    text += "# fixed_lower " + tally(rep.fixed_lower) + "\n";
    text += "# fixed_upper " + tally(rep.fixed_upper) + "\n";
    text += "# both_fixed_nonzero " + std::to_string(rep.both_fixed_nonzero) + "\n";
    emit(out, text);
    if (ok) *ok = rep.ok();
  });
}

ybe_status ybe_tree_render(uint64_t n, const char* i, unsigned k, char** out) {
  return guarded([&] {
    require(i, "index");
    emit(out, ybe::PumpTree::build(ybe::parse_bigint(i), n, k).render());
  });
}

ybe_status ybe_key_new(const ybe_solution* base, const char* i, unsigned k, int materialize,
                       uint64_t max_points, ybe_key** out) {
  return guarded([&] {
    require(base, "solution");
    require(i, "index");
    require(out, "output pointer");
    const ybe::BigInt index = ybe::parse_bigint(i);
    *out = new ybe_key{materialize ? ybe::LazyKey::materialized(base->value, index, k,
                                                                 bound_or_default(max_points))
                                   : ybe::LazyKey::lazy(base->value, index, k)};
  });
}

ybe_status ybe_preservation_check(const ybe_solution* s, size_t census_max_n, char** report,
                                  int* ok) {
  return guarded([&] {
    require(ok, "ok pointer");
    std::vector<ybe::Solution> corpus;
    if (s) corpus.push_back(*s->value);
    for (size_t n = 1; n <= census_max_n; ++n) {
      for (auto& t : ybe::all_solutions(n)) corpus.push_back(std::move(t));
    }
    std::ostringstream text;
    std::size_t failures = 0;
    for (const ybe::Solution& t : corpus) {
      ybe::require_solution(t);
      const auto failed = ybe::preservation_failures(t);
      if (failed.empty()) continue;
      ++failures;
      text << "fails";
      for (const auto& name : failed) text << ' ' << name;
      text << " for size " << t.size() << ":";
      for (ybe::Point x = 1; x <= t.size(); ++x) {
        text << ' ' << ybe::format_perm(t.sigma(x), ybe::PermStyle::OneLine);
        if (x < t.size()) text << " /";
      }
      text << "\n";
    }
    text << "checked " << corpus.size() << " solutions\n";
    text << "preservation " << (failures ? "fails for " + std::to_string(failures) + " solutions" : "ok")
         << "\n";
    emit(report, text.str());
    *ok = failures ? 0 : 1;
  });
}

ybe_status ybe_key_eval(const ybe_key* key, const char* m, int inverse, char** out) {
  return guarded([&] {
    require(key, "key");
    require(m, "point");
    const ybe::BigInt point = ybe::parse_bigint(m);
    emit(out, big_text(inverse ? key->value.eval_inverse(point) : key->value.eval(point)));
  });
}

ybe_status ybe_key_domain_size(const ybe_key* key, char** out) {
  return guarded([&] {
    require(key, "key");
    emit(out, big_text(key->value.domain_size()));
  });
}

void ybe_key_free(ybe_key* key) { delete key; }

ybe_status ybe_key_check(const ybe_key* key, const char* points, int all_points,
                         uint64_t random_count, uint64_t seed, char** report, int* ok) {
  return guarded([&] {
    require(key, "key");
    require(ok, "ok pointer");
    const ybe::LazyKey& k = key->value;
    std::vector<ybe::BigInt> sample;
    if (points) sample = ybe::parse_blocks(points);
    if (all_points) {
      if (k.domain_size() > ybe::BigInt(1) << 24) {
        throw ybe::Error(ybe::ErrorCode::LimitExceeded,
                         "domain of " + big_text(k.domain_size()) + " points is too large to check every point");
      }
      for (ybe::BigInt m = 1; m <= k.domain_size(); ++m) sample.push_back(m);
    }
    const auto random = ybe::random_points(k.domain_size(), random_count, seed);
    sample.insert(sample.end(), random.begin(), random.end());

    const ybe::KeyCheck c = ybe::check_key(k, sample);
    std::ostringstream text;
    text << "checked " << c.points << " points of " << big_text(k.domain_size()) << "\n";
    text << "inverse " << (c.inverse_failures ? "fails at " + std::to_string(c.inverse_failures) + " points" : "ok")
         << "\n";
    if (c.against_materialized) {
      text << "lazy_vs_materialized "
           << (c.lazy_mismatches ? "differs at " + std::to_string(c.lazy_mismatches) + " points" : "agree")
           << "\n";
    }
    emit(report, text.str());
    *ok = c.ok() ? 1 : 0;
  });
}

ybe_status ybe_encode_text(const char* text, char** blocks) {
  return guarded([&] {
    require(text, "text");
    emit(blocks, ybe::format_blocks(ybe::encode_text(text), true));
  });
}

ybe_status ybe_decode_text(const char* blocks, char** text) {
  return guarded([&] {
    require(blocks, "blocks");
    emit(text, ybe::decode_text(ybe::parse_blocks(blocks)));
  });
}

ybe_status ybe_encrypt(const ybe_key* key, const char* blocks, int text_mode, char** out) {
  return guarded([&] {
    require(key, "key");
    require(blocks, "blocks");
    emit(out, ybe::format_blocks(ybe::encrypt(ybe::parse_blocks(blocks), key->value), text_mode));
  });
}

ybe_status ybe_decrypt(const ybe_key* key, const char* blocks, int text_mode, char** out) {
  return guarded([&] {
    require(key, "key");
    require(blocks, "blocks");
    emit(out, ybe::format_blocks(ybe::decrypt(ybe::parse_blocks(blocks), key->value), text_mode));
  });
}

ybe_status ybe_sign(const ybe_key* sender, const ybe_key* receiver, const char* blocks,
                    int text_mode, char** intermediate, char** transmitted) {
  return guarded([&] {
    require(sender, "sender key");
    require(receiver, "receiver key");
    require(blocks, "blocks");
    require(intermediate, "output pointer");
    require(transmitted, "output pointer");
    const ybe::SignedMessage m = ybe::sign(ybe::parse_blocks(blocks), sender->value, receiver->value);
    std::string a = ybe::format_blocks(m.intermediate, text_mode);
    std::string b = ybe::format_blocks(m.transmitted, text_mode);
    *intermediate = dup(a);
    try {
      *transmitted = dup(b);
    } catch (...) {
      std::free(*intermediate);
      *intermediate = nullptr;
      throw;
    }
  });
}

ybe_status ybe_open_signature(const ybe_key* receiver, const ybe_key* sender, const char* blocks,
                              int text_mode, char** out) {
  return guarded([&] {
    require(sender, "sender key");
    require(receiver, "receiver key");
    require(blocks, "blocks");
    emit(out, ybe::format_blocks(
                  ybe::open_signature(ybe::parse_blocks(blocks), receiver->value, sender->value),
                  text_mode));
  });
}

ybe_status ybe_key_exchange(const ybe_solution* base, unsigned k, const char* i, const char* j,
                            const char* l, uint64_t seed, uint64_t max_points, char** transcript,
                            int* keys_equal) {
  return guarded([&] {
    require(base, "solution");
    require(i, "i");
    require(j, "j");
    require(l, "l");
    ybe::KeyExchangeOptions options;
    options.seed = seed;
    options.max_points = bound_or_default(max_points);
    const ybe::KeyExchange kx =
        ybe::key_exchange(base->value, k, ybe::parse_bigint(i), ybe::parse_bigint(j),
                          ybe::parse_bigint(l), options);
    const std::uint64_t n = base->value->size();
    const ybe::BigInt size = kx.bob_key.outer.domain_size();

    std::string text;
    text += "public: k=" + std::to_string(k) + " size=" + size.str() + " i=" + kx.i.str() + "\n";
    text += "bob→alice: " + kx.bob_to_alice.str() + "\n";
    text += "alice→bob: " + kx.alice_to_bob.str() + "\n";
    text += "bob: retrieves l=" + kx.bob_recovered.str() + ", key ghat_" + kx.bob_recovered.str() +
            " ghat_" + kx.bob_inner.str() + "\n";
    text += "alice: retrieves j=" + kx.alice_recovered.str() + ", key ghat_" +
            kx.alice_recovered.str() + " ghat_" + kx.alice_inner.str() + "\n";
    if (k == 1) {
      text += "bob: key " + g_pair_name(n, kx.bob_recovered) + " " + g_pair_name(n, kx.bob_inner) + "\n";
      text += "alice: key " + g_pair_name(n, kx.alice_recovered) + " " +
              g_pair_name(n, kx.alice_inner) + "\n";
    }
    text += std::string("keys: ") + (kx.keys_equal ? "equal" : "DIFFERENT") + " (" +
            (kx.exhaustive ? "all " : "") + std::to_string(kx.points_compared) +
            (kx.exhaustive ? " points" : " sampled points") + ")\n";
    if (kx.exhaustive && kx.keys_equal && size <= 1024) {
      text += "shared key: " +
              ybe::format_perm(kx.bob_key.materialize(options.max_points), ybe::PermStyle::CyclesCompact) +
              "\n";
    }
    emit(transcript, text);
    if (keys_equal) *keys_equal = kx.keys_equal;
  });
}

ybe_status ybe_census_build(size_t n, ybe_census** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new ybe_census{ybe::enumerate_solutions(n)};
  });
}

ybe_status ybe_census_filter(const ybe_census* c, const ybe_census_filter_spec* spec,
                             ybe_census** out) {
  return guarded([&] {
    require(c, "census");
    require(out, "output pointer");
    ybe::CensusPredicate keep;
    if (spec) {
      const ybe_census_filter_spec f = *spec;
      keep = [f](const ybe::AnalysisReport& r) {
        if (f.indecomposable >= 0 && r.indecomposable != (f.indecomposable != 0)) return false;
        if (f.irretractable >= 0 && !r.retract_level.has_value() != (f.irretractable != 0)) return false;
        if (f.condition_C >= 0 && r.condition_C != (f.condition_C != 0)) return false;
        if (f.class_m > 0 && r.class_m != static_cast<std::size_t>(f.class_m)) return false;
        return true;
      };
    }
    *out = new ybe_census{ybe::census_filter(c->value, keep)};
  });
}

uint64_t ybe_census_total(const ybe_census* c) { return c ? c->value.total_count : 0; }

size_t ybe_census_iso(const ybe_census* c) { return c ? c->value.iso_count() : 0; }

ybe_status ybe_census_representative(const ybe_census* c, size_t index, ybe_solution** out) {
  return guarded([&] {
    require(c, "census");
    require(out, "output pointer");
    if (index >= c->value.classes.size()) throw ybe::Error(ybe::ErrorCode::OutOfRange, "no such class");
    *out = new ybe_solution{
        std::make_shared<const ybe::Solution>(c->value.classes[index].representative)};
  });
}

ybe_status ybe_census_summary(const ybe_census* c, char** out) {
  return guarded([&] {
    require(c, "census");
    emit(out, ybe::census_summary(c->value));
  });
}

ybe_status ybe_census_write(const ybe_census* c, const char* dir) {
  return guarded([&] {
    require(c, "census");
    require(dir, "directory");
    ybe::write_census(dir, c->value);
  });
}

void ybe_census_free(ybe_census* c) { delete c; }

ybe_status ybe_cost_model(uint64_t n, unsigned k, int small_i, const ybe_cost_constants* constants,
                          char** operations, double* seconds, double* log10_seconds) {
  return guarded([&] {
    const ybe::CostEstimate c = ybe::cost_model(
        n, k, small_i ? ybe::CostVariant::SmallI : ybe::CostVariant::General, constants_of(constants));
    if (operations) *operations = dup(c.operations.str());
    if (seconds) *seconds = c.seconds;
    if (log10_seconds) *log10_seconds = c.log10_seconds;
  });
}

ybe_status ybe_attack_cost(uint64_t n, unsigned k, const char* solution_count,
                           const ybe_cost_constants* constants, double* seconds,
                           double* log10_seconds) {
  return guarded([&] {
    require(solution_count, "solution count");
    const ybe::AttackEstimate a =
        ybe::attack_cost(n, k, ybe::parse_bigint(solution_count), constants_of(constants));
    if (seconds) *seconds = a.seconds;
    if (log10_seconds) *log10_seconds = a.log10_seconds;
  });
}

ybe_status ybe_search_space(uint64_t n, unsigned k, const ybe_cost_constants* constants,
                            double* log10_permutations, double* log10_seconds) {
  return guarded([&] {
    const ybe::SearchSpace s = ybe::search_space(n, k, constants_of(constants));
    if (log10_permutations) *log10_permutations = s.log10_permutations;
    if (log10_seconds) *log10_seconds = s.log10_seconds;
  });
}

ybe_status ybe_cycle_type_count(uint64_t size, const char* cycle_type, double* log10_count,
                                char** exact) {
  return guarded([&] {
    require(cycle_type, "cycle type");
    const ybe::CycleType t = parse_cycle_type(size, cycle_type);
    const double lg = ybe::cycle_type_count_log10(t);
    if (exact) *exact = dup(ybe::cycle_type_count_exact(t).str());
    if (log10_count) *log10_count = lg;
  });
}

}  // extern "C"
