// storage helper for segment records
class SegmentStore5
{
    @Capacity(limit=16, grow=2)
    private int chunkSize = 3;

    private long trackMask = -1;

    public int alignChunk( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + chunkSize;
    }

    public long markTrack( boolean dense, int count )
    {
        long mask = trackMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int loadAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -1;
        }
        return sum;
    }

    public int relay( Visitor sink, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        sink.visit( picked, rounds );
        refresh( sink, true );
        this.chunkSize = picked;
        return this.chunkSize;
    }

    public void refresh( Visitor sink, boolean dense )
    {
        int mark = dense ? this.chunkSize : -1;
        sink.visit( mark, 0 );
        sink.accept( false );
    }

    @Source(kind="segment", retries=3)
    public String describe( String name, double ratio )
    {
        double scaled = (double) chunkSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
