"""
错误类型定义

所有领域错误同时继承 ValueError，调用方可以按需捕获具体类型或统一按 ValueError 处理。
"""

from typing import Optional


class ChowkitError(Exception):
    """chowkit 错误基类"""


class ConfigError(ChowkitError, ValueError):
    """配置错误"""


class RingMismatchError(ChowkitError, ValueError):
    """两个元素不属于同一个 Chow 环表示"""


class InvalidDegreeError(ChowkitError, ValueError):
    """次数向量长度或取值不合法"""


class TowerShapeError(ChowkitError, ValueError):
    """塔结构不受支持，或构造步骤的前置条件不满足"""


class UnknownPresetError(ChowkitError, ValueError):
    """未知的预设空间名称"""


class NonIntegralResultError(ChowkitError, ValueError):
    """应为整数的积分结果出现了非平凡分母"""


class BudgetExceededError(ChowkitError, ValueError):
    """有限域点数超出预算"""


class OracleInputError(ChowkitError, ValueError):
    """有限域验证的输入不合法"""


class DiamondError(ChowkitError, ValueError):
    """Hodge 菱形格式错误或形状不匹配"""


class LedgerError(ChowkitError, ValueError):
    """上同调/K0 账本数据错误"""


class DslError(ChowkitError, ValueError):
    """DSL 错误基类，带行列位置"""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 source: str = "<script>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source} line {line} column {column}: {message}")


class DslLexError(DslError):
    """词法错误"""


class DslSyntaxError(DslError):
    """语法错误"""


class DslNameError(DslError):
    """名称未声明"""


class DslArityError(DslError):
    """次数向量元数与当前生成元个数不匹配"""


class ExecutionError(ChowkitError, RuntimeError):
    """脚本执行错误，记录出错语句的序号"""

    def __init__(self, index: int, cause: Exception, statement: Optional[str] = None):
        self.index = index
        self.cause = cause
        self.statement = statement
        where = f" ({statement})" if statement else ""
        super().__init__(f"statement {index}{where}: {cause}")


class PreconditionError(ChowkitError, ValueError):
    """参数不满足运算的前置条件（例如 e <= f）"""


class ConsistencyError(ChowkitError, ValueError):
    """内部一致性检查失败（对称性、Euler 数核对等）"""
