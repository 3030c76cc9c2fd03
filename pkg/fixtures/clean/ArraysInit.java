class ArraysInit
{
    int[] empty = {};
    int[] nums = { 1, 2, 3 };
    int[][] grid = { { 1, 2 }, { 3, 4 } };
    String[] names = new String[] { "a", "b" };
    int[] sized = new int[16];

    int sum()
    {
        int total = 0;
        for (int i = 0; i < nums.length; i++)
        {
            total += nums[i];
        }
        return total;
    }
}
