#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covertool/field.hpp"
#include "covertool/graph.hpp"
#include "covertool/report.hpp"

namespace covertool {

// Each check returns a report; unmet hypotheses and size caps give a skipped
// verdict, never a failure.

// The five conditions of the linear-resolution characterization, with the
// "every k" conditions checked for 1..k. Linear presentation counts as false
// when J(G)^(j) is not generated in a single degree.
VerificationReport verify_main_theorem(const Graph& g, std::size_t k,
                                       const Field& field = Field::rationals());

// reg(S/J(G)^(k)) for k = 1..kmax is nondecreasing.
VerificationReport verify_reg_monotone(const Graph& g, std::size_t kmax,
                                       const Field& field = Field::rationals());

// deg(J(G)^(k)) = k deg(J(G)) for k = 1..kmax, for unmixed or claw-free G.
VerificationReport verify_deg_linear(const Graph& g, std::size_t kmax,
                                     const Field& field = Field::rationals());

// J(G)^(k) + (x) = u^k J'^(k) + (x) with u the product of N(x) and J' the
// cover ideal of G \ N[x] in the full ring.
VerificationReport verify_deletion_identity(
    const Graph& g, std::string_view vertex, std::size_t k,
    const Field& field = Field::rationals());
// The deletion identity for every vertex and every power 1..k.
VerificationReport verify_deletion_identity_all(
    const Graph& g, std::size_t k, const Field& field = Field::rationals());

// (J(G)^(k) : x_1...x_n) = J(G)^(k-2), k >= 2.
VerificationReport verify_colon_identity(const Graph& g, std::size_t k,
                                         const Field& field = Field::rationals());

// J(G)^(k) generated in a single degree implies G very well-covered.
VerificationReport verify_singdeg(const Graph& g, std::size_t k,
                                  const Field& field = Field::rationals());

// reg(J(G)) = pd(S/I(G)).
VerificationReport verify_terai(const Graph& g,
                                const Field& field = Field::rationals());

enum class Theorem {
  main,
  reg_monotone,
  deg_linear,
  deletion,
  colon,
  singdeg,
  terai,
  gk,
};

// "main", "reg-monotone", "deg-linear", "deletion", "colon", "singdeg",
// "terai", "gk".
std::string to_string(Theorem t);
Theorem parse_theorem(std::string_view token);
const std::vector<Theorem>& all_theorems();

struct VerifyParams {
  std::size_t k = 2;  // also r for gk
  std::size_t kmax = 3;
  // Deletion vertex; when absent every vertex is checked for powers 1..k.
  std::optional<std::string> vertex;
  Field field;
};

VerificationReport run_verification(const Graph& g, Theorem theorem,
                                    const VerifyParams& params);

}  // namespace covertool
