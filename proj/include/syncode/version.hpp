#pragma once

#define SYNCODE_VERSION "0.1.0"
