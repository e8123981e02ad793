from decouple import config, Csv

# 计算配置
SERIES_ORDER = config('SHAM_SERIES_ORDER', default=8, cast=int)
MAX_DEGREE = config('SHAM_MAX_DEGREE', default=64, cast=int)
PROBE_DEGREE = config('SHAM_PROBE_DEGREE', default=3, cast=int)

# 输出配置
OUTPUT_FORMAT = config('SHAM_OUTPUT_FORMAT', default="text")

# 调试配置
DEBUG = config('SHAM_DEBUG', default=False, cast=bool)

# 日志配置
LOG_LEVEL = config('SHAM_LOG_LEVEL', default="WARNING")
LOG_FORMAT = config('SHAM_LOG_FORMAT', default='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
DEBUG_CATEGORIES = config('SHAM_DEBUG_CATEGORIES', default="", cast=Csv())
LOG_TO_FILE = config('SHAM_LOG_TO_FILE', default=False, cast=bool)
LOG_DIR = config('SHAM_LOG_DIR', default="logs/")
