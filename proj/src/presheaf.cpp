#include "mhcat/datasets.hpp"
