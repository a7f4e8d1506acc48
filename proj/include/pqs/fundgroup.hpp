#ifndef PQS_FUNDGROUP_HPP
#define PQS_FUNDGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "pqs/covers.hpp"
#include "pqs/permgroup.hpp"

namespace pqs {

// A word over presentation generators: letter +k / -k is generator k (1-based)
// or its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
std::string word_string(const Word& w);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;  // freely reduced
};

struct CosetTable {
  bool completed = false;      // false: coset cap exceeded
  int index = 0;               // number of cosets on success
  std::vector<std::vector<int>> table;  // [coset][2*gen + (0 fwd | 1 inv)]
};

// HLT coset enumeration with coincidence handling. Deterministic: relators
// are scanned in order against cosets in definition order.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_words,
                        int coset_cap);

enum class VerifyOutcome { yes, no, inconclusive };

// True iff relators hold under the images, the images generate, and coset
// enumeration over the trivial subgroup gives exactly |G| cosets.
// Cap exhaustion is reported as inconclusive, never as refutation.
VerifyOutcome verify_presentation(const Presentation& pres, const FiniteGroup& g,
                                  const std::vector<int>& images, int coset_cap);

// Condition (2) of a good presentation: g = h a_j^l h^-1.
struct Condition2Entry {
  int generator = 0;   // j (0-based into the assignment)
  int exponent = 1;    // l
  int conjugator = 0;  // h, group element index
};

std::optional<std::vector<Condition2Entry>> find_condition2_data(
    const SphericalSystem& sys, const std::vector<int>& assignment);

// Relator shape certificates for condition (3).
enum class RelatorShape { power, conjugation, product };  // a (pure power), a, b

struct ShapeCertificate {
  RelatorShape shape = RelatorShape::power;
  // Shape (a): rotating the relator left by `rotation` letters yields
  // a_i^{e1} u a_j^{e2} u^-1 (u empty and e2 = 0 for a pure power).
  int rotation = 0;
  int gen_i = 0;
  long long e1 = 0;
  int gen_j = 0;
  long long e2 = 0;
  Word conjugator;  // u
};

// Shape (a) parse of a freely and cyclically reduced word, if one exists.
std::optional<ShapeCertificate> shape_a_certificate(const Word& w);

struct GoodPresentationWitness {
  std::vector<int> assignment;             // group element per presentation generator
  Presentation presentation;
  std::vector<Condition2Entry> condition2;  // one entry per system element
  std::vector<Word> conjugator_words;       // word over the assignment for each h_i
  std::vector<ShapeCertificate> shapes;     // one per relator
  std::vector<int> hurwitz_moves;           // normalization applied before the search
};

struct Pi1Options {
  int max_generators = 4;
  int max_word_length = 8;      // cap on relator search length
  int conjugator_word_bound = 4;
  int coset_cap = 250'000;
  long long node_cap = 200'000'000;
  int threads = 1;
};

struct Pi1Result {
  enum class Status { verified, inconclusive };
  Status status = Status::inconclusive;
  std::optional<GoodPresentationWitness> witness;
  std::string detail;
};

// Searches for a good presentation extended by the system; success certifies
// that pi_1 of the resolved diagonal quotient is trivial. Never claims the
// group is nontrivial.
Pi1Result pi1_trivial_certificate(const SphericalSystem& sys, const Pi1Options& opts = {});

// Re-checks every part of a witness against the system (used by tests and by
// the CLI before printing a certificate).
bool verify_witness(const SphericalSystem& sys, const GoodPresentationWitness& w,
                    int coset_cap = 250'000);

// Word evaluation in the group under an assignment of elements to generators.
int evaluate_word(const FiniteGroup& g, const std::vector<int>& assignment, const Word& w);

}  // namespace pqs

#endif
