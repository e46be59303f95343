from .validators import check_meta_args, check_shard, check_var_list

__all__ = ["check_meta_args", "check_shard", "check_var_list"]
