#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fussi {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// --- ingest ---------------------------------------------------------------

struct MalformedLine : Error {
  std::size_t line_no;
  MalformedLine(std::size_t line, const std::string& detail)
      : Error("malformed line " + std::to_string(line) + ": " + detail),
        line_no(line) {}
};

struct BadVisibility : Error {
  int value;
  BadVisibility(std::size_t line, int v)
      : Error("line " + std::to_string(line) + ": visibility " +
              std::to_string(v) + " not in {0,1,2}"),
        value(v) {}
};

struct InconsistentLabel : Error {
  InconsistentLabel(std::size_t line)
      : Error("line " + std::to_string(line) +
              ": onset frame given for a non-crossing label") {}
};

struct InvalidConfig : Error {
  using Error::Error;
};

// --- tracker ----------------------------------------------------------------

struct NumericalBlowup : Error {
  using Error::Error;
};

struct EmptyCrop : Error {
  EmptyCrop() : Error("empty image crop") {}
};

struct OutOfOrderFrame : Error {
  OutOfOrderFrame(int seen, int last)
      : Error("frame " + std::to_string(seen) +
              " arrived after frame " + std::to_string(last)) {}
};

// --- skeleton features ------------------------------------------------------

struct TooFewKeypoints : Error {
  int visible;
  explicit TooFewKeypoints(int n)
      : Error("only " + std::to_string(n) +
              " of 9 skeleton points visible (need 4)"),
        visible(n) {}
};

struct DegenerateSkeleton : Error {
  DegenerateSkeleton() : Error("torso length and bbox diagonal are both ~0") {}
};

struct EmptyTrack : Error {
  EmptyTrack() : Error("track has no frames") {}
};

// --- classifiers --------------------------------------------------------------

struct UntrainedModel : Error {
  UntrainedModel() : Error("model has not been trained or loaded") {}
};

struct SingleClassDataset : Error {
  SingleClassDataset() : Error("training set contains a single class") {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct EmptyDataset : Error {
  EmptyDataset() : Error("training set is empty") {}
};

struct ShapeMismatch : Error {
  using Error::Error;
};

// --- metrics -----------------------------------------------------------------

struct LengthMismatch : Error {
  using Error::Error;
};

struct NoPositives : Error {
  NoPositives() : Error("ground truth contains no positive labels") {}
};

struct EmptyGroundTruth : Error {
  EmptyGroundTruth() : Error("ground truth is empty") {}
};

struct EmptyTestSet : Error {
  EmptyTestSet() : Error("test set is empty") {}
};

struct InsufficientHistory : Error {
  InsufficientHistory(int onset)
      : Error("predictions do not cover [onset-16, onset] for onset " +
              std::to_string(onset)) {}
};

}  // namespace fussi
