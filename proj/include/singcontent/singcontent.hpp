#pragma once

#include "singcontent/lattice.hpp"
#include "singcontent/cone.hpp"
#include "singcontent/hirzebruch_jung.hpp"
#include "singcontent/dedekind.hpp"
#include "singcontent/polygon.hpp"
#include "singcontent/mutation.hpp"
#include "singcontent/json_io.hpp"
