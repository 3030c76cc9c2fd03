// storage helper for node records
class NodeStore10
{
    @Capacity(limit=128, grow=2)
    private int trackSize = 1;

    private long windowMask = -1;

    public int mergeTrack( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + trackSize;
    }

    public long scanWindow( boolean dense, int count )
    {
        long mask = windowMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mergeTrack( mask, count ) + mask;
    }

    public int flushAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -2;
        }
        return sum;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.trackSize = picked;
        return this.trackSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.trackSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="node", retries=2)
    public String describe( String title, double ratio )
    {
        double scaled = (double) trackSize * ratio;
        long wide = (long) scaled;
        return title + "#" + wide.toString();
    }
}
