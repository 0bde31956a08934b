from enum import Enum

class ChannelKind(Enum):
    ONE_TO_TWO = "1->2"
    ONE_TO_THREE = "1->3"
    ONE_TO_FOUR = "1->4"
