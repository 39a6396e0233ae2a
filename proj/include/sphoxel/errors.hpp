#pragma once

#include <stdexcept>
#include <string>

namespace sphoxel {

// Base class for all library errors; message carries the offending context.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SPHOXEL_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& what) : Error(what) {}               \
    }

SPHOXEL_DEFINE_ERROR(OriginOutsideSphere);
SPHOXEL_DEFINE_ERROR(InvalidBounds);
SPHOXEL_DEFINE_ERROR(NotALeaf);
SPHOXEL_DEFINE_ERROR(InvalidConfig);
SPHOXEL_DEFINE_ERROR(EmptyCameraSet);
SPHOXEL_DEFINE_ERROR(DegenerateScene);
SPHOXEL_DEFINE_ERROR(NoValidOverlap);
SPHOXEL_DEFINE_ERROR(UnreadableFile);
SPHOXEL_DEFINE_ERROR(UnsupportedFormat);
SPHOXEL_DEFINE_ERROR(EmptyCloud);
SPHOXEL_DEFINE_ERROR(EmptyTrajectory);
SPHOXEL_DEFINE_ERROR(WriteFailure);
SPHOXEL_DEFINE_ERROR(BadTreeFile);

#undef SPHOXEL_DEFINE_ERROR

} // namespace sphoxel
