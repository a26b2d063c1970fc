#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace memesim {

enum class ErrorCode {
  Io,
  Decode,
  InvalidDim,
  InvalidKernel,
  DimMismatch,
  AllMasked,
  InvalidThreshold,
  ModelUntrained,
  InvalidDmax,
  MissingEmbedding,
  ScoreNotInPool,
  MissingContext,
  EmptyReferenceSet,
  EmptyData,
  TooFewSamples,
  TooFewPerClass,
  LengthMismatch,
  MissingFeatures,
  EmptySample,
  AllZeroDifferences,
  IncompleteGrid,
  CollisionExhaustion,
  RatioInfeasible,
  Parse,
  DuplicatePairId,
  MissingFile,
  Config,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable code. All library failures use it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace memesim
