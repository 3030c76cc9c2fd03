class Switches
{
    int pick(int k)
    {
        int out = 0;
        switch (k)
        {
            case 0:
                out = 10;
                break;
            case 1:
                out = 20;
                break;
            default:
                out = 30;
                break;
        }
        return out;
    }
}
